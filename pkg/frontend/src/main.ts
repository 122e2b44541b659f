/** Bootstrap: worker id prompt, screen switching, status line. */

import { ApiClient } from "./api.js";
import { AnnotationScreen } from "./annotate.js";
import { MapScreen } from "./map.js";
import { TriageScreen } from "./triage.js";

function statusLine(): (msg: string) => void {
  const el = document.getElementById("status");
  return (msg) => {
    if (el) el.textContent = msg;
  };
}

export function boot(): void {
  const params = new URLSearchParams(window.location.search);
  const workerId = params.get("worker")
    ?? window.localStorage.getItem("gvdb-worker")
    ?? window.prompt("Worker id:")
    ?? "anonymous";
  window.localStorage.setItem("gvdb-worker", workerId);

  const api = new ApiClient("", workerId);
  const main = document.getElementById("screen");
  if (!main) throw new Error("missing #screen container");
  const status = statusLine();
  status(`Signed in as ${workerId}`);

  const triage = new TriageScreen(main, api, status);
  const annotate = new AnnotationScreen(main, api, status);
  const map = new MapScreen(main, api, status);
  let active: TriageScreen | AnnotationScreen | MapScreen | null = null;

  const screens: Record<string, () => Promise<void>> = {
    triage: async () => {
      active = triage;
      await triage.start();
    },
    annotate: async () => {
      active = annotate;
      await annotate.start();
    },
    map: async () => {
      active = map;
      await map.start();
    },
  };

  for (const name of Object.keys(screens)) {
    const btn = document.querySelector<HTMLButtonElement>(`[data-screen=${name}]`);
    btn?.addEventListener("click", () => {
      if (active instanceof TriageScreen) active.stop();
      const go = screens[name];
      if (go) void go();
    });
  }

  void screens[params.get("screen") ?? "triage"]?.();
}

if (typeof document !== "undefined" && document.getElementById("screen")) {
  boot();
}
