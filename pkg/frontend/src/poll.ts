// Long-poll transport: the HTTP fallback of the wire protocol.
//
// Browsers cannot open the raw TCP socket, so the console speaks the
// same JSON payloads through POST /v0/session/<sid>/send and a
// GET /v0/session/<sid>/recv loop.

import { ClientMessage, ServerMessage, parseServerMessage } from "./protocol.js";

export type TransportStatus = "connected" | "reconnecting";

export class PollTransport {
  private sid: string | null = null;
  private stopped = false;
  private handlers: Array<(msg: ServerMessage) => void> = [];
  private statusHandlers: Array<(status: TransportStatus) => void> = [];

  constructor(
    private readonly baseUrl: string,
    private readonly fetchFn: typeof fetch = fetch,
  ) {}

  onMessage(handler: (msg: ServerMessage) => void): void {
    this.handlers.push(handler);
  }

  onStatus(handler: (status: TransportStatus) => void): void {
    this.statusHandlers.push(handler);
  }

  private setStatus(status: TransportStatus): void {
    for (const handler of this.statusHandlers) handler(status);
  }

  async connect(): Promise<void> {
    const res = await this.fetchFn(`${this.baseUrl}/v0/session`, { method: "POST" });
    if (!res.ok) throw new Error(`session create failed: ${res.status}`);
    const body = (await res.json()) as { sid: string };
    this.sid = body.sid;
    void this.pollLoop();
  }

  async send(message: ClientMessage): Promise<void> {
    if (this.sid === null) throw new Error("not connected");
    const res = await this.fetchFn(`${this.baseUrl}/v0/session/${this.sid}/send`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(message),
    });
    if (!res.ok) throw new Error(`send failed: ${res.status}`);
  }

  stop(): void {
    this.stopped = true;
  }

  private async pollLoop(): Promise<void> {
    while (!this.stopped && this.sid !== null) {
      try {
        const res = await this.fetchFn(
          `${this.baseUrl}/v0/session/${this.sid}/recv?timeout_s=20`,
        );
        if (!res.ok) throw new Error(`poll failed: ${res.status}`);
        const body = (await res.json()) as { messages: unknown[] };
        this.setStatus("connected");
        for (const raw of body.messages) {
          const message = parseServerMessage(raw);
          for (const handler of this.handlers) handler(message);
        }
      } catch (err) {
        if (this.stopped) return;
        // Transient poll failure: surface it, back off briefly and retry.
        this.setStatus("reconnecting");
        await new Promise((resolve) => setTimeout(resolve, 500));
      }
    }
  }
}
