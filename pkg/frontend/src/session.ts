import { SeedApi, SeedPayload } from "./api";

export interface SessionView {
  seed: SeedPayload;
  /** Every vertex clicked so far, including steps currently undone. */
  trail: number[];
  /** How many entries of the trail are applied on the server right now. */
  cursor: number;
  busy: boolean;
}

export interface SessionEvents {
  /** Fired whenever the view changes (seed, trail position, or busy flag). */
  onView?: (view: SessionView) => void;
  /** Fired for user-facing notices: frozen-vertex hints and server errors. */
  onNotice?: (message: string) => void;
}

/**
 * Drives one mutation session against the backend.
 *
 * Every seed shown to the user is exactly what the server returned; the
 * session never mutates a matrix or a cluster variable itself. Locally it
 * only remembers the trail of clicked vertices, so the history breadcrumb
 * can step backwards (server undo) and forwards again (replaying the
 * remembered clicks through the API one at a time). Clicking a vertex
 * while the cursor sits in the middle of the trail forks the history:
 * the undone tail is dropped.
 *
 * At most one request is in flight; clicks arriving while busy are
 * ignored rather than queued.
 */
export class ExplorerSession {
  private seed: SeedPayload;
  private trail: number[] = [];
  private cursor = 0;
  private busy = false;

  private constructor(
    private readonly api: SeedApi,
    readonly id: string,
    seed: SeedPayload,
    private readonly events: SessionEvents,
  ) {
    this.seed = seed;
  }

  static async open(api: SeedApi, preset: string, events: SessionEvents = {}): Promise<ExplorerSession> {
    const handle = await api.createSession(preset);
    const session = new ExplorerSession(api, handle.id, handle.seed, events);
    session.emitView();
    return session;
  }

  get view(): SessionView {
    return {
      seed: this.seed,
      trail: [...this.trail],
      cursor: this.cursor,
      busy: this.busy,
    };
  }

  /** The displayed cluster strings, byte for byte as the server sent them. */
  get cluster(): string[] {
    return [...this.seed.cluster];
  }

  /**
   * Handle a click on a vertex (1-based, matching the API). Frozen
   * vertices get a hint instead of a request. Resolves true when the
   * seed advanced.
   */
  async clickVertex(vertex: number): Promise<boolean> {
    if (this.busy) {
      return false;
    }
    const { n, m, labels } = this.seed.quiver;
    if (!Number.isInteger(vertex) || vertex < 1 || vertex > m) {
      return false;
    }
    if (vertex > n) {
      this.notice(`${labels[vertex - 1]} is frozen and cannot be mutated`);
      return false;
    }
    return this.run(async () => {
      const seed = await this.api.mutate(this.id, vertex);
      this.trail = this.trail.slice(0, this.cursor);
      this.trail.push(vertex);
      this.cursor = this.trail.length;
      this.seed = seed;
    });
  }

  /** Step one mutation back. Resolves false at the start of the history. */
  async undo(): Promise<boolean> {
    if (this.busy || this.cursor === 0) {
      return false;
    }
    return this.run(async () => {
      this.seed = await this.api.undo(this.id);
      this.cursor -= 1;
    });
  }

  /**
   * Jump to a breadcrumb position: undo back to earlier steps, or replay
   * remembered clicks to reach later ones. The trail itself is kept, so
   * jumping to 0 and back to the end restores the same seed.
   */
  async jumpTo(step: number): Promise<boolean> {
    if (this.busy || step < 0 || step > this.trail.length || step === this.cursor) {
      return false;
    }
    return this.run(async () => {
      while (this.cursor > step) {
        this.seed = await this.api.undo(this.id);
        this.cursor -= 1;
      }
      while (this.cursor < step) {
        this.seed = await this.api.mutate(this.id, this.trail[this.cursor]);
        this.cursor += 1;
      }
    });
  }

  private async run(action: () => Promise<void>): Promise<boolean> {
    this.busy = true;
    this.emitView();
    try {
      await action();
      return true;
    } catch (err) {
      this.notice(err instanceof Error ? err.message : String(err));
      return false;
    } finally {
      this.busy = false;
      this.emitView();
    }
  }

  private emitView(): void {
    this.events.onView?.(this.view);
  }

  private notice(message: string): void {
    this.events.onNotice?.(message);
  }
}
