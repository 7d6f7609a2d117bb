import { ChildProcess, execFileSync, spawn } from "node:child_process";
import { afterAll, beforeAll, describe, expect, it } from "vitest";
import { ApiClient } from "../src/api";
import { ExplorerSession } from "../src/session";

/**
 * End-to-end parity: the cluster strings the explorer displays after a
 * sequence of vertex clicks must equal, byte for byte, what the backend
 * CLI prints for the same walk. Needs the `clusterkit` command on PATH
 * (or CLUSTERKIT_BIN pointing at it); the backend is spawned once on an
 * ephemeral port.
 */

const BIN = process.env.CLUSTERKIT_BIN ?? "clusterkit";

let server: ChildProcess;
let client: ApiClient;

beforeAll(async () => {
  server = spawn(BIN, ["serve", "--port", "0"], { stdio: ["ignore", "pipe", "pipe"] });
  const base = await new Promise<string>((resolve, reject) => {
    let out = "";
    let err = "";
    server.stdout!.on("data", (chunk: Buffer) => {
      out += chunk.toString();
      const hit = out.match(/listening on (http:\/\/[^\s]+)/);
      if (hit) {
        resolve(hit[1]);
      }
    });
    server.stderr!.on("data", (chunk: Buffer) => {
      err += chunk.toString();
    });
    server.on("error", reject);
    server.on("exit", (code) => reject(new Error(`backend exited with code ${code}: ${err}`)));
  });
  client = new ApiClient(base);
});

afterAll(() => {
  server?.kill();
});

function cliCluster(preset: string, walk: number[]): string[] {
  const args = ["mutate", "--preset", preset];
  if (walk.length > 0) {
    args.push("--walk", walk.join(","));
  }
  const out = execFileSync(BIN, args, { encoding: "utf8" });
  return (JSON.parse(out) as { cluster: string[] }).cluster;
}

async function clickThrough(preset: string, clicks: number[]): Promise<ExplorerSession> {
  const session = await ExplorerSession.open(client, preset);
  for (const vertex of clicks) {
    expect(await session.clickVertex(vertex)).toBe(true);
  }
  return session;
}

function expectByteEqual(shown: string[], printed: string[]): void {
  expect(shown).toEqual(printed);
  const shownBytes = Buffer.from(JSON.stringify(shown), "utf8");
  const printedBytes = Buffer.from(JSON.stringify(printed), "utf8");
  expect(shownBytes.equals(printedBytes)).toBe(true);
}

// 20 scripted click sequences across the three presets.
const SEQUENCES: Array<[string, number[]]> = [
  ["a2", [1]],
  ["a2", [2]],
  ["a2", [1, 2]],
  ["a2", [1, 2, 1]],
  ["a2", [1, 2, 1, 2, 1]],
  ["a2", [2, 1, 2, 1, 2, 1, 2]],
  ["b2", [1]],
  ["b2", [2]],
  ["b2", [2, 1]],
  ["b2", [1, 2, 1]],
  ["b2", [1, 2, 1, 2, 1, 2]],
  ["b2", [2, 1, 2, 1, 2, 1, 2, 1]],
  ["rectangles:3,7", [1]],
  ["rectangles:3,7", [1, 1]],
  ["rectangles:3,7", [1, 2, 3, 4, 5, 6]],
  ["rectangles:3,7", [6, 5, 4, 3, 2, 1]],
  ["rectangles:3,7", [1, 3, 5, 2, 4, 6]],
  ["rectangles:3,7", [2, 4, 2, 4, 2, 4]],
  ["rectangles:3,7", [5, 3, 1, 5, 3, 1, 5]],
  ["rectangles:3,7", [1, 2, 1, 3, 2, 1, 4, 3, 2, 1]],
];

describe("clicked walks display exactly what the CLI prints", () => {
  it.each(SEQUENCES)("%s clicks %j", async (preset, clicks) => {
    const session = await clickThrough(preset, clicks);
    expectByteEqual(session.cluster, cliCluster(preset, clicks));
  });
});

describe("history navigation stays in step with the CLI", () => {
  it("undo lands on the prefix walk", async () => {
    const session = await clickThrough("b2", [1, 2, 1]);
    expect(await session.undo()).toBe(true);
    expectByteEqual(session.cluster, cliCluster("b2", [1, 2]));
  });

  it("jumping to the start shows the preset seed", async () => {
    const session = await clickThrough("rectangles:3,7", [1, 2, 3]);
    expect(await session.jumpTo(0)).toBe(true);
    expectByteEqual(session.cluster, cliCluster("rectangles:3,7", []));
  });

  it("jumping back and forth restores the same seed", async () => {
    const session = await clickThrough("rectangles:3,7", [1, 2, 3]);
    const before = session.cluster;
    await session.jumpTo(0);
    expect(await session.jumpTo(3)).toBe(true);
    expectByteEqual(session.cluster, before);
    expectByteEqual(session.cluster, cliCluster("rectangles:3,7", [1, 2, 3]));
  });

  it("clicking after a jump forks onto the truncated walk", async () => {
    const session = await clickThrough("a2", [1, 2]);
    await session.jumpTo(1);
    expect(await session.clickVertex(2)).toBe(true);
    expect(session.view.trail).toEqual([1, 2]);
    expectByteEqual(session.cluster, cliCluster("a2", [1, 2]));
  });

  it("a frozen click changes nothing", async () => {
    const notices: string[] = [];
    const session = await ExplorerSession.open(client, "rectangles:3,7", {
      onNotice: (message) => notices.push(message),
    });
    await session.clickVertex(1);
    expect(await session.clickVertex(7)).toBe(false);
    expect(notices.some((text) => text.includes("frozen"))).toBe(true);
    expectByteEqual(session.cluster, cliCluster("rectangles:3,7", [1]));
  });
});
