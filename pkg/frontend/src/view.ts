/**
 * Pure view models for the ranking display; the DOM layer just paints them.
 */

import type { RankResponse } from './types.js';

export interface RankingBar {
  alternative: string;
  rank: number;
  closeness: number;
  /** Closeness at 4 decimals, rounded upward to match the engine's tables. */
  label: string;
  /** Bar width relative to the best closeness; a lone bar is full width. */
  widthPct: number;
  /** Positive = moved up since the previous response; null on first render. */
  delta: number | null;
}

const ceil4 = (value: number): number => Math.ceil(value * 1e4 - 1e-9) / 1e4 + 0;

export const formatCloseness = (value: number): string => ceil4(value).toFixed(4);

/** Bars sorted best-first; ties already carry distinct server-assigned ranks. */
export const renderRanking = (response: RankResponse, previous: RankResponse | null): RankingBar[] => {
  const previousRanks = new Map<string, number>();
  if (previous) {
    previous.alternatives.forEach((name, i) => previousRanks.set(name, previous.ranks[i] ?? 0));
  }
  const max = Math.max(...response.closeness);
  const order = response.alternatives
    .map((_, i) => i)
    .sort((a, b) => (response.ranks[a] ?? 0) - (response.ranks[b] ?? 0));
  return order.map((i) => {
    const name = response.alternatives[i] ?? `#${i + 1}`;
    const closeness = response.closeness[i] ?? 0;
    const rank = response.ranks[i] ?? 0;
    const before = previousRanks.get(name);
    return {
      alternative: name,
      rank,
      closeness,
      label: formatCloseness(closeness),
      widthPct: max > 0 ? (closeness / max) * 100 : 100,
      delta: before === undefined ? null : before - rank,
    };
  });
};
