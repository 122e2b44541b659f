/** Map-view helpers: projection and rollup consistency checks. */

import type { MapAggregate, MapCity, MapState } from "./api.js";

/** Equirectangular projection onto a continental-US viewport. */
export function project(lat: number, lon: number, width: number, height: number):
    { x: number; y: number } {
  const lonMin = -125, lonMax = -66, latMin = 24, latMax = 50;
  const x = ((lon - lonMin) / (lonMax - lonMin)) * width;
  const y = ((latMax - lat) / (latMax - latMin)) * height;
  return { x, y };
}

export function markerRadius(count: number): number {
  return 3 + 2.5 * Math.sqrt(count);
}

/** State rollup must equal the sum of its city markers plus the unknown bucket. */
export function rollupConsistent(agg: MapAggregate): boolean {
  const byState = new Map<string, number>();
  for (const city of agg.cities) {
    byState.set(city.state, (byState.get(city.state) ?? 0) + city.article_count);
  }
  return agg.states.every(
    (s) => s.article_count === (byState.get(s.state) ?? 0) + s.unknown_city_articles,
  );
}

export function geocodedCities(agg: MapAggregate): MapCity[] {
  return agg.cities.filter((c) => c.lat !== null && c.lon !== null);
}

export function sortedStates(agg: MapAggregate): MapState[] {
  return [...agg.states].sort((a, b) => b.article_count - a.article_count);
}
