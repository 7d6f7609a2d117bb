/** View-model helpers: cluster-string truncation and the history breadcrumb. */

export interface ClusterDisplay {
  /** Canonical string exactly as the server sent it (used by copy). */
  full: string;
  /** What the collapsed row shows. */
  short: string;
  truncated: boolean;
}

/**
 * Long Laurent polynomials are shown truncated and expand on click. The
 * cut lands on a term boundary (the spaced " + " / " - " separators) so
 * the preview never ends inside an exponent or a coefficient.
 */
export function clusterDisplay(full: string, limit = 64): ClusterDisplay {
  if (full.length <= limit) {
    return { full, short: full, truncated: false };
  }
  const window = full.slice(0, limit);
  const cut = Math.max(window.lastIndexOf(" + "), window.lastIndexOf(" - "));
  const head = cut > 0 ? full.slice(0, cut) : window;
  return { full, short: `${head} …`, truncated: true };
}

export interface BreadcrumbItem {
  /** 0 is the preset seed, k is the state after the k-th click. */
  step: number;
  /** Label of the vertex whose click produced this state ("start" for 0). */
  label: string;
  current: boolean;
  /** Past the cursor: undone, still reachable by clicking it. */
  ahead: boolean;
}

export function breadcrumb(trail: number[], cursor: number, labels: string[]): BreadcrumbItem[] {
  const items: BreadcrumbItem[] = [
    { step: 0, label: "start", current: cursor === 0, ahead: false },
  ];
  trail.forEach((vertex, i) => {
    items.push({
      step: i + 1,
      label: labels[vertex - 1] ?? String(vertex),
      current: cursor === i + 1,
      ahead: i + 1 > cursor,
    });
  });
  return items;
}
