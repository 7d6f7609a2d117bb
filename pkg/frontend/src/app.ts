import { ApiClient, PresetRow } from "./api";
import { breadcrumb, clusterDisplay } from "./format";
import { buildScene, quiverSvg } from "./quiver";
import { ExplorerSession, SessionView } from "./session";

/**
 * Assembles the page: preset picker, clickable quiver, cluster variable
 * list, and the history breadcrumb. All state transitions go through an
 * ExplorerSession; this class only paints whatever view it is handed.
 */
export class App {
  private session: ExplorerSession | null = null;
  private presets: PresetRow[] = [];
  private expanded = new Set<number>();

  private readonly select: HTMLSelectElement;
  private readonly description: HTMLElement;
  private readonly quiverHolder: HTMLElement;
  private readonly clusterList: HTMLOListElement;
  private readonly undoButton: HTMLButtonElement;
  private readonly breadcrumbNav: HTMLElement;
  private readonly toastHolder: HTMLElement;

  constructor(private readonly root: HTMLElement, private readonly api: ApiClient) {
    root.innerHTML = `
      <header>
        <h1>Seed explorer</h1>
        <select class="preset-select" title="preset"></select>
        <span class="preset-description"></span>
      </header>
      <main>
        <section class="quiver-panel">
          <div class="quiver"></div>
          <p class="hint">Click a round vertex to mutate there. Boxed vertices are frozen.</p>
        </section>
        <aside class="cluster-panel">
          <h2>Cluster</h2>
          <ol class="cluster"></ol>
        </aside>
      </main>
      <footer>
        <button class="undo" type="button">Undo</button>
        <nav class="breadcrumb"></nav>
      </footer>
      <div class="toast-holder"></div>`;
    this.select = root.querySelector(".preset-select") as HTMLSelectElement;
    this.description = root.querySelector(".preset-description") as HTMLElement;
    this.quiverHolder = root.querySelector(".quiver") as HTMLElement;
    this.clusterList = root.querySelector(".cluster") as HTMLOListElement;
    this.undoButton = root.querySelector(".undo") as HTMLButtonElement;
    this.breadcrumbNav = root.querySelector(".breadcrumb") as HTMLElement;
    this.toastHolder = root.querySelector(".toast-holder") as HTMLElement;

    this.select.addEventListener("change", () => {
      void this.openPreset(this.select.value);
    });
    this.undoButton.addEventListener("click", () => {
      void this.session?.undo();
    });
    this.quiverHolder.addEventListener("click", (event) => {
      const hit = (event.target as Element).closest("[data-vertex]");
      if (hit) {
        void this.session?.clickVertex(Number(hit.getAttribute("data-vertex")));
      }
    });
    this.breadcrumbNav.addEventListener("click", (event) => {
      const hit = (event.target as Element).closest("[data-step]");
      if (hit) {
        void this.session?.jumpTo(Number(hit.getAttribute("data-step")));
      }
    });
  }

  async start(preset?: string): Promise<void> {
    try {
      this.presets = await this.api.presets();
    } catch (err) {
      this.toast(err instanceof Error ? err.message : String(err));
      return;
    }
    this.select.innerHTML = "";
    for (const row of this.presets) {
      const option = document.createElement("option");
      option.value = row.spec;
      option.textContent = row.spec;
      this.select.appendChild(option);
    }
    const spec = preset ?? this.presets[0]?.spec;
    if (spec) {
      this.select.value = spec;
      await this.openPreset(spec);
    }
  }

  private async openPreset(spec: string): Promise<void> {
    this.expanded.clear();
    this.description.textContent = this.presets.find((row) => row.spec === spec)?.description ?? "";
    try {
      this.session = await ExplorerSession.open(this.api, spec, {
        onView: (view) => this.render(view),
        onNotice: (message) => this.toast(message),
      });
    } catch (err) {
      this.toast(err instanceof Error ? err.message : String(err));
    }
  }

  private render(view: SessionView): void {
    const { seed } = view;
    this.root.classList.toggle("busy", view.busy);
    this.select.disabled = view.busy;
    this.undoButton.disabled = view.busy || view.cursor === 0;

    this.quiverHolder.innerHTML = quiverSvg(buildScene(seed.quiver, seed.layout));

    this.clusterList.innerHTML = "";
    seed.cluster.forEach((value, i) => {
      this.clusterList.appendChild(this.clusterRow(seed.quiver.labels[i], value, i, seed.quiver.frozen[i]));
    });

    this.breadcrumbNav.innerHTML = "";
    for (const item of breadcrumb(view.trail, view.cursor, seed.quiver.labels)) {
      const button = document.createElement("button");
      button.type = "button";
      button.textContent = item.label;
      button.setAttribute("data-step", String(item.step));
      button.classList.toggle("current", item.current);
      button.classList.toggle("ahead", item.ahead);
      button.disabled = view.busy;
      this.breadcrumbNav.appendChild(button);
    }
  }

  private clusterRow(label: string, value: string, index: number, frozen: boolean): HTMLLIElement {
    const row = document.createElement("li");
    row.classList.toggle("frozen", frozen);
    const name = document.createElement("span");
    name.className = "name";
    name.textContent = label;
    row.appendChild(name);

    const display = clusterDisplay(value);
    const text = document.createElement("span");
    text.className = "value";
    const showFull = !display.truncated || this.expanded.has(index);
    text.textContent = showFull ? display.full : display.short;
    if (display.truncated) {
      text.classList.add("expandable");
      text.title = showFull ? "click to collapse" : "click to expand";
      text.addEventListener("click", () => {
        if (this.expanded.has(index)) {
          this.expanded.delete(index);
        } else {
          this.expanded.add(index);
        }
        if (this.session) {
          this.render(this.session.view);
        }
      });
    }
    row.appendChild(text);

    const copy = document.createElement("button");
    copy.type = "button";
    copy.className = "copy";
    copy.textContent = "copy";
    copy.title = "copy the full canonical string";
    copy.addEventListener("click", () => {
      void navigator.clipboard.writeText(display.full).then(
        () => this.toast(`copied ${label}`),
        () => this.toast("copy failed"),
      );
    });
    row.appendChild(copy);
    return row;
  }

  private toast(message: string): void {
    const note = document.createElement("div");
    note.className = "toast";
    note.textContent = message;
    this.toastHolder.appendChild(note);
    setTimeout(() => note.remove(), 2600);
  }
}
