// DOM wiring: one play panel, one leaderboard panel with a radar.
// All protocol and presentation logic lives in the imported modules.

import {
  LeaderboardRow,
  Snapshot,
  leaderboardRows,
  radarPath,
  radarSpokes,
  skillRows,
  SkillRow,
} from "./leaderboard.js";
import { PlaySession, PlayState, ratingDelta } from "./play.js";
import { PollTransport } from "./poll.js";

const $ = <T extends HTMLElement>(id: string): T => {
  const el = document.getElementById(id);
  if (!el) throw new Error(`missing element #${id}`);
  return el as T;
};

function baseUrl(): string {
  return window.location.origin;
}

// ---------------------------------------------------------------- play --

let session: PlaySession | null = null;
let turnDeadline: number | null = null; // epoch ms when the turn clock runs out

function renderClock(): void {
  if (turnDeadline === null) {
    $("turn-clock").textContent = "";
    return;
  }
  const left = Math.max(0, Math.ceil((turnDeadline - Date.now()) / 1000));
  $("turn-clock").textContent =
    left > 0
      ? `your turn — ${left}s on the clock`
      : "time! the server is treating this turn as a forfeit";
}

function renderPlay(state: PlayState): void {
  $("phase").textContent = state.phase;
  const scrollback = $("scrollback");
  scrollback.textContent = state.scrollback.join("\n\n────────────\n\n");
  scrollback.scrollTop = scrollback.scrollHeight;

  const input = $<HTMLTextAreaElement>("action-input");
  const send = $<HTMLButtonElement>("send-button");
  input.disabled = !state.inputEnabled;
  send.disabled = !state.inputEnabled;
  // Countdown anchored to the server-provided allowance, not a local guess
  // of whose turn it is.
  turnDeadline = state.deadlineS !== null ? Date.now() + state.deadlineS * 1000 : null;
  renderClock();

  if (state.phase === "finished" && state.rewards && state.rating) {
    const delta = ratingDelta(state.rating);
    const sign = delta >= 0 ? "+" : "";
    $("result").textContent =
      `match over — your reward: ${state.myReward}  ·  ` +
      `Humanity: μ ${state.rating.mu_before.toFixed(2)} → ` +
      `${state.rating.mu_after.toFixed(2)} (${sign}${delta.toFixed(3)})`;
  }
  if (state.lastError) {
    $("play-error").textContent = state.lastError;
  }
}

async function joinGame(): Promise<void> {
  const nick = $<HTMLInputElement>("nickname").value.trim() || "anonymous";
  const email = $<HTMLInputElement>("email").value.trim() || "anonymous@console";
  const envId = $<HTMLSelectElement>("env-select").value;

  const transport = new PollTransport(baseUrl());
  session = new PlaySession(transport, nick, email);
  session.onChange(renderPlay);
  transport.onMessage((msg) => session?.handle(msg));
  transport.onStatus((status) => {
    $("play-error").textContent =
      status === "reconnecting" ? "connection lost — reconnecting…" : "";
  });
  await transport.connect();
  await session.join([envId]);
}

async function sendAction(): Promise<void> {
  if (!session) return;
  const input = $<HTMLTextAreaElement>("action-input");
  const warning = session.validateDraft(input.value);
  $("play-error").textContent = warning ?? "";
  if (warning && !window.confirm(`${warning}\nSend anyway?`)) return;
  await session.submit(input.value);
  input.value = "";
}

// --------------------------------------------------------- leaderboard --

let currentSkillRows: SkillRow[] = [];

function renderRows(rows: LeaderboardRow[]): void {
  const body = $("leaderboard-body");
  body.innerHTML = "";
  if (rows.length === 0) {
    $("leaderboard-empty").textContent = "No matches recorded yet.";
    return;
  }
  $("leaderboard-empty").textContent = "";
  rows.forEach((row, index) => {
    const tr = document.createElement("tr");
    if (row.isHumanity) tr.className = "humanity";
    const cells = [
      String(index + 1),
      row.name,
      row.mu.toFixed(3),
      row.sigma.toFixed(3),
      row.conservative.toFixed(3),
      String(row.matches),
    ];
    for (const text of cells) {
      const td = document.createElement("td");
      td.textContent = text;
      tr.appendChild(td);
    }
    tr.addEventListener("click", () => renderRadar(row.name));
    body.appendChild(tr);
  });
}

function renderRadar(participant: string): void {
  $("radar-title").textContent = participant;
  const spokes = radarSpokes(currentSkillRows, participant, 90);
  const svg = $("radar-plot");
  const path = radarPath(spokes);
  const labels = spokes
    .map((s, i) => {
      const angle = (2 * Math.PI * i) / spokes.length - Math.PI / 2;
      const lx = Math.cos(angle) * 105;
      const ly = Math.sin(angle) * 105;
      const short = s.skill.split(" ")[0];
      return `<text x="${lx.toFixed(1)}" y="${ly.toFixed(1)}" class="axis-label">${short}</text>`;
    })
    .join("");
  const rings = [0.25, 0.5, 0.75, 1]
    .map((r) => `<circle cx="0" cy="0" r="${90 * r}" class="ring"/>`)
    .join("");
  svg.innerHTML =
    `<g transform="translate(130,120)">${rings}` +
    (path ? `<path d="${path}" class="radar-area"/>` : "") +
    `${labels}</g>`;
}

async function refreshLeaderboard(): Promise<void> {
  try {
    const [snapshotRes, csvRes] = await Promise.all([
      fetch(`${baseUrl()}/leaderboard.json`),
      fetch(`${baseUrl()}/skill_profiles.csv`),
    ]);
    const snapshot = (await snapshotRes.json()) as Snapshot;
    currentSkillRows = skillRows(await csvRes.text());
    renderRows(leaderboardRows(snapshot));
  } catch {
    $("leaderboard-empty").textContent = "Server unreachable.";
  }
}

// -------------------------------------------------------------- wiring --

window.addEventListener("DOMContentLoaded", () => {
  $("join-button").addEventListener("click", () => void joinGame());
  $("send-button").addEventListener("click", () => void sendAction());
  $<HTMLTextAreaElement>("action-input").addEventListener("keydown", (ev) => {
    if (ev.key === "Enter" && !ev.shiftKey) {
      ev.preventDefault();
      void sendAction();
    }
  });
  void refreshLeaderboard();
  setInterval(() => void refreshLeaderboard(), 5_000);
  setInterval(renderClock, 1_000);
});
