// Leaderboard rows and radar geometry, derived verbatim from the files
// the server publishes (leaderboard.json and skill_profiles.csv).

export const SKILL_AXES = [
  "Strategic Planning",
  "Spatial Thinking",
  "Pattern Recognition",
  "Theory of Mind",
  "Logical Reasoning",
  "Memory Recall",
  "Bluffing",
  "Persuasion",
  "Uncertainty Estimation",
  "Adaptability",
] as const;

export interface RatingBlock {
  mu: number;
  sigma: number;
  matches: number;
}

export interface SnapshotEntry {
  global: RatingBlock;
  per_env: Record<string, RatingBlock>;
}

export type Snapshot = Record<string, SnapshotEntry>;

export interface LeaderboardRow {
  name: string;
  mu: number;
  sigma: number;
  conservative: number;
  matches: number;
  isHumanity: boolean;
}

// Row order must match the document order the server wrote; JSON object
// key order round-trips through JSON.parse, so no re-sorting here.
export function leaderboardRows(snapshot: Snapshot): LeaderboardRow[] {
  return Object.entries(snapshot).map(([name, entry]) => ({
    name,
    mu: entry.global.mu,
    sigma: entry.global.sigma,
    conservative: entry.global.mu - 3 * entry.global.sigma,
    matches: entry.global.matches,
    isHumanity: name === "Humanity",
  }));
}

export interface SkillRow {
  name: string;
  skill: string;
  raw: number;
  normalized: number;
}

// Minimal CSV reader for the profile export: quoted fields supported,
// first line is the header.
export function parseCsv(text: string): string[][] {
  const rows: string[][] = [];
  let field = "";
  let row: string[] = [];
  let inQuotes = false;
  const push = () => {
    row.push(field);
    field = "";
  };
  const endRow = () => {
    push();
    if (row.length > 1 || row[0] !== "") rows.push(row);
    row = [];
  };
  for (let i = 0; i < text.length; i++) {
    const ch = text[i];
    if (inQuotes) {
      if (ch === '"') {
        if (text[i + 1] === '"') {
          field += '"';
          i++;
        } else {
          inQuotes = false;
        }
      } else {
        field += ch;
      }
    } else if (ch === '"') {
      inQuotes = true;
    } else if (ch === ",") {
      push();
    } else if (ch === "\n") {
      endRow();
    } else if (ch !== "\r") {
      field += ch;
    }
  }
  if (field !== "" || row.length > 0) endRow();
  return rows;
}

export function skillRows(csvText: string): SkillRow[] {
  const rows = parseCsv(csvText);
  const header = rows[0];
  if (!header || header.join(",") !== "name,skill,raw,normalized") {
    throw new Error(`unexpected skill CSV header: ${header?.join(",")}`);
  }
  return rows.slice(1).map((cells) => ({
    name: cells[0] ?? "",
    skill: cells[1] ?? "",
    raw: Number(cells[2]),
    normalized: Number(cells[3]),
  }));
}

export interface RadarSpoke {
  skill: string;
  value: number | null; // null = skill absent from this profile
  x: number;
  y: number;
}

// Ten fixed axes; profiles without a skill leave the spoke empty rather
// than faking a zero.
export function radarSpokes(
  rows: SkillRow[],
  participant: string,
  radius = 100,
): RadarSpoke[] {
  const mine = new Map(
    rows.filter((r) => r.name === participant).map((r) => [r.skill, r.normalized]),
  );
  return SKILL_AXES.map((skill, i) => {
    const angle = (2 * Math.PI * i) / SKILL_AXES.length - Math.PI / 2;
    const value = mine.has(skill) ? (mine.get(skill) as number) : null;
    const length = value === null ? 0 : value * radius;
    return {
      skill,
      value,
      x: Math.cos(angle) * length,
      y: Math.sin(angle) * length,
    };
  });
}

export function radarPath(spokes: RadarSpoke[]): string {
  const present = spokes.filter((s) => s.value !== null);
  if (present.length === 0) return "";
  const coords = present.map((s) => `${s.x.toFixed(2)},${s.y.toFixed(2)}`);
  return `M${coords.join("L")}Z`;
}
