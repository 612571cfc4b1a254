import { describe, expect, it } from "vitest";

import { PollTransport, TransportStatus } from "../src/poll.js";
import { ServerMessage } from "../src/protocol.js";

type FetchCall = { url: string; init?: RequestInit };

function jsonResponse(payload: unknown, status = 200): Response {
  return new Response(JSON.stringify(payload), { status });
}

function fakeServer() {
  const calls: FetchCall[] = [];
  let recvQueue: unknown[][] = [];
  let failNextPolls = 0;

  const fetchFn = (async (input: RequestInfo | URL, init?: RequestInit) => {
    const url = String(input);
    calls.push({ url, init });
    if (url.endsWith("/v0/session") && init?.method === "POST") {
      return jsonResponse({ sid: "s1" });
    }
    if (url.includes("/send")) {
      return jsonResponse({ ok: true });
    }
    if (url.includes("/recv")) {
      if (failNextPolls > 0) {
        failNextPolls--;
        return jsonResponse({}, 503);
      }
      const messages = recvQueue.shift() ?? [];
      // Empty poll: emulate the server's long-poll delay briefly.
      if (messages.length === 0) {
        await new Promise((resolve) => setTimeout(resolve, 20));
      }
      return jsonResponse({ messages });
    }
    throw new Error(`unexpected fetch ${url}`);
  }) as typeof fetch;

  return {
    fetchFn,
    calls,
    push: (messages: unknown[]) => recvQueue.push(messages),
    failPolls: (n: number) => (failNextPolls = n),
  };
}

describe("PollTransport", () => {
  it("creates a session, sends through it, and dispatches received messages", async () => {
    const server = fakeServer();
    const transport = new PollTransport("http://arena", server.fetchFn);
    const seen: ServerMessage[] = [];
    transport.onMessage((m) => seen.push(m));
    server.push([{ type: "queued" }, { type: "error", code: "x", detail: "y" }]);

    await transport.connect();
    await transport.send({ type: "enqueue", env_ids: ["TicTacToe-v0"] });
    await new Promise((resolve) => setTimeout(resolve, 50));
    transport.stop();

    expect(seen.map((m) => m.type)).toEqual(["queued", "error"]);
    const sendCall = server.calls.find((c) => c.url.includes("/send"))!;
    expect(sendCall.url).toBe("http://arena/v0/session/s1/send");
    expect(JSON.parse(String(sendCall.init?.body))).toEqual({
      type: "enqueue",
      env_ids: ["TicTacToe-v0"],
    });
  });

  it("reports reconnecting on poll failures and recovers", async () => {
    const server = fakeServer();
    const transport = new PollTransport("http://arena", server.fetchFn);
    const statuses: TransportStatus[] = [];
    transport.onStatus((s) => statuses.push(s));
    server.failPolls(1);
    server.push([{ type: "queued" }]);

    await transport.connect();
    await new Promise((resolve) => setTimeout(resolve, 700));
    transport.stop();

    expect(statuses[0]).toBe("reconnecting");
    expect(statuses).toContain("connected");
  });

  it("refuses to send before connecting", async () => {
    const transport = new PollTransport("http://arena", fakeServer().fetchFn);
    await expect(
      transport.send({ type: "action", match_id: "m", text: "[4]" }),
    ).rejects.toThrow("not connected");
  });
});
