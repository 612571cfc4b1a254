// Wire protocol payloads, mirroring the arena server exactly.
//
// Client -> server: hello, enqueue, action.  Server -> client: queued,
// match_found, observation, match_end, error.  All outbound messages go
// through the builders below so nothing hand-rolled ever hits the wire.

export interface HelloMessage {
  type: "hello";
  model_name: string;
  model_description: string;
  email: string;
  human?: boolean;
}

export interface EnqueueMessage {
  type: "enqueue";
  env_ids: string[];
}

export interface ActionMessage {
  type: "action";
  match_id: string;
  text: string;
}

export type ClientMessage = HelloMessage | EnqueueMessage | ActionMessage;

export interface QueuedMessage {
  type: "queued";
}

export interface MatchFoundMessage {
  type: "match_found";
  match_id: string;
  env_id: string;
  player_id: number;
  num_players: number;
}

export interface ObservationMessage {
  type: "observation";
  match_id: string;
  player_id: number;
  text: string;
  deadline_s?: number;
}

export interface RatingMovement {
  mu_before: number;
  sigma_before: number;
  mu_after: number;
  sigma_after: number;
}

export interface MatchEndMessage {
  type: "match_end";
  match_id: string;
  rewards: Record<string, number>;
  rating: RatingMovement;
}

export interface ErrorMessage {
  type: "error";
  code: string;
  detail: string;
}

export type ServerMessage =
  | QueuedMessage
  | MatchFoundMessage
  | ObservationMessage
  | MatchEndMessage
  | ErrorMessage;

export function hello(
  modelName: string,
  modelDescription: string,
  email: string,
  human = false,
): HelloMessage {
  const msg: HelloMessage = {
    type: "hello",
    model_name: modelName,
    model_description: modelDescription,
    email,
  };
  if (human) msg.human = true;
  return msg;
}

export function enqueue(envIds: string[]): EnqueueMessage {
  return { type: "enqueue", env_ids: [...envIds] };
}

export function action(matchId: string, text: string): ActionMessage {
  return { type: "action", match_id: matchId, text };
}

const SERVER_TYPES = new Set([
  "queued",
  "match_found",
  "observation",
  "match_end",
  "error",
]);

export function parseServerMessage(raw: unknown): ServerMessage {
  if (typeof raw !== "object" || raw === null || !("type" in raw)) {
    throw new Error("malformed server message");
  }
  const type = (raw as { type: unknown }).type;
  if (typeof type !== "string" || !SERVER_TYPES.has(type)) {
    throw new Error(`unknown server message type: ${String(type)}`);
  }
  return raw as ServerMessage;
}

// Advisory only: the server is authoritative on action legality.  This
// just warns before sending text with no [...] group at all.
export function looksLikeAction(text: string): boolean {
  return /\[[^\[\]]*\]/.test(text);
}
