/** Map browsing: per-city markers on a US viewport plus state rollups. */

import { ApiClient, MapAggregate } from "./api.js";
import { geocodedCities, markerRadius, project, rollupConsistent, sortedStates } from "./maputil.js";

const WIDTH = 900;
const HEIGHT = 520;
const SVG_NS = "http://www.w3.org/2000/svg";

export class MapScreen {
  private lastAggregate: MapAggregate | null = null;

  constructor(
    private readonly root: HTMLElement,
    private readonly api: ApiClient,
    private readonly onStatus: (msg: string) => void = () => {},
  ) {}

  async start(): Promise<void> {
    try {
      this.lastAggregate = await this.api.mapAggregate();
    } catch (err) {
      if (this.lastAggregate) {
        this.onStatus("API unreachable; showing the last loaded aggregate.");
      } else {
        this.root.innerHTML = `<div class="banner error" data-testid="map-error">
          Map data unavailable: ${String(err)}</div>`;
        return;
      }
    }
    this.render(this.lastAggregate);
  }

  render(agg: MapAggregate): void {
    this.root.innerHTML = "";
    const wrap = document.createElement("div");
    wrap.className = "map-layout";

    const svg = document.createElementNS(SVG_NS, "svg");
    svg.setAttribute("viewBox", `0 0 ${WIDTH} ${HEIGHT}`);
    svg.setAttribute("class", "us-map");
    svg.dataset.testid = "map-svg";
    const frame = document.createElementNS(SVG_NS, "rect");
    frame.setAttribute("width", String(WIDTH));
    frame.setAttribute("height", String(HEIGHT));
    frame.setAttribute("class", "map-frame");
    svg.appendChild(frame);

    for (const city of geocodedCities(agg)) {
      const { x, y } = project(city.lat as number, city.lon as number, WIDTH, HEIGHT);
      const dot = document.createElementNS(SVG_NS, "circle");
      dot.setAttribute("cx", x.toFixed(1));
      dot.setAttribute("cy", y.toFixed(1));
      dot.setAttribute("r", markerRadius(city.article_count).toFixed(1));
      dot.setAttribute("class", "city-marker");
      dot.dataset.city = city.city;
      dot.dataset.state = city.state;
      dot.dataset.count = String(city.article_count);
      const label = document.createElementNS(SVG_NS, "title");
      label.textContent = `${city.city}, ${city.state}: ${city.incident_count} incidents, `
        + `${city.article_count} articles`;
      dot.appendChild(label);
      dot.addEventListener("click", () => void this.showIncidents(city.city, city.state));
      svg.appendChild(dot);
    }
    wrap.appendChild(svg);

    const table = document.createElement("table");
    table.className = "rollups";
    table.dataset.testid = "rollups";
    table.innerHTML = "<thead><tr><th>State</th><th>Incidents</th><th>Articles</th>"
      + "<th>City unknown</th></tr></thead>";
    const tbody = document.createElement("tbody");
    for (const s of sortedStates(agg)) {
      const tr = document.createElement("tr");
      tr.innerHTML = `<td>${s.state}</td><td>${s.incident_count}</td>`
        + `<td>${s.article_count}</td><td>${s.unknown_city_articles}</td>`;
      tbody.appendChild(tr);
    }
    table.appendChild(tbody);
    wrap.appendChild(table);

    if (!rollupConsistent(agg)) {
      const warn = document.createElement("div");
      warn.className = "banner warn";
      warn.textContent = "Rollup mismatch between state totals and city markers.";
      wrap.appendChild(warn);
    }

    const detail = document.createElement("div");
    detail.dataset.testid = "city-detail";
    wrap.appendChild(detail);
    this.root.appendChild(wrap);
  }

  async showIncidents(city: string, state: string): Promise<void> {
    const detail = this.root.querySelector("[data-testid=city-detail]");
    if (!detail) return;
    const page = await this.api.incidents({ city, state });
    detail.innerHTML = `<h3>${city}, ${state}: ${page.total} record(s)</h3>`;
    const list = document.createElement("ul");
    for (const item of page.items as Array<Record<string, { value?: unknown } | string>>) {
      const li = document.createElement("li");
      const date = (item.date as { value?: unknown } | undefined)?.value ?? "undated";
      li.textContent = `${String(date)} — article ${String(item.article_id).slice(0, 12)}…`;
      list.appendChild(li);
    }
    detail.appendChild(list);
  }
}
