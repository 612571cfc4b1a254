// Play-session state machine, kept free of DOM so it is testable headless.
//
// Input is enabled exactly while the latest observation addresses this
// seat; the scrollback is append-only and mirrors the observation texts
// the server sent us, in arrival order.

import {
  ClientMessage,
  RatingMovement,
  ServerMessage,
  action,
  enqueue,
  hello,
  looksLikeAction,
} from "./protocol.js";

export type SessionPhase = "idle" | "queued" | "playing" | "finished";

export interface PlayState {
  phase: SessionPhase;
  matchId: string | null;
  envId: string | null;
  playerId: number | null;
  numPlayers: number | null;
  scrollback: string[];
  inputEnabled: boolean;
  deadlineS: number | null;
  rewards: Record<string, number> | null;
  myReward: number | null;
  rating: RatingMovement | null;
  lastError: string | null;
}

export interface SendPort {
  send(message: ClientMessage): Promise<void> | void;
}

export class PlaySession {
  readonly state: PlayState = {
    phase: "idle",
    matchId: null,
    envId: null,
    playerId: null,
    numPlayers: null,
    scrollback: [],
    inputEnabled: false,
    deadlineS: null,
    rewards: null,
    myReward: null,
    rating: null,
    lastError: null,
  };

  private listeners: Array<(state: PlayState) => void> = [];

  constructor(
    private readonly transport: SendPort,
    private readonly nickname: string,
    private readonly email: string,
  ) {}

  onChange(listener: (state: PlayState) => void): void {
    this.listeners.push(listener);
  }

  private notify(): void {
    for (const listener of this.listeners) listener(this.state);
  }

  async join(envIds: string[]): Promise<void> {
    // Human seats register under their nick but are rated as Humanity.
    await this.transport.send(hello(this.nickname, "human player (web console)", this.email, true));
    await this.transport.send(enqueue(envIds));
    this.state.phase = "queued";
    this.notify();
  }

  // Advisory pre-send check; the server stays authoritative.
  validateDraft(text: string): string | null {
    if (!looksLikeAction(text)) {
      return "No [action] brackets found; the game may treat this as a forfeit.";
    }
    return null;
  }

  async submit(text: string): Promise<void> {
    if (!this.state.inputEnabled || this.state.matchId === null) {
      throw new Error("not your turn");
    }
    this.state.inputEnabled = false;
    this.state.deadlineS = null;
    this.notify();
    await this.transport.send(action(this.state.matchId, text));
  }

  handle(message: ServerMessage): void {
    switch (message.type) {
      case "queued":
        this.state.phase = "queued";
        break;
      case "match_found":
        this.state.phase = "playing";
        this.state.matchId = message.match_id;
        this.state.envId = message.env_id;
        this.state.playerId = message.player_id;
        this.state.numPlayers = message.num_players;
        break;
      case "observation":
        if (message.match_id !== this.state.matchId) return;
        this.state.scrollback.push(message.text);
        this.state.inputEnabled = message.player_id === this.state.playerId;
        this.state.deadlineS = message.deadline_s ?? null;
        break;
      case "match_end":
        if (message.match_id !== this.state.matchId) return;
        this.state.phase = "finished";
        this.state.inputEnabled = false;
        this.state.deadlineS = null;
        this.state.rewards = message.rewards;
        this.state.myReward =
          this.state.playerId !== null
            ? (message.rewards[String(this.state.playerId)] ?? null)
            : null;
        this.state.rating = message.rating;
        break;
      case "error":
        this.state.lastError = `${message.code}: ${message.detail}`;
        break;
    }
    this.notify();
  }
}

export function ratingDelta(rating: RatingMovement): number {
  return rating.mu_after - rating.mu_before;
}
