import { describe, expect, it } from 'vitest';

import type { RankResponse } from '../src/types.js';
import { formatCloseness, renderRanking } from '../src/view.js';

const response = (alternatives: string[], closeness: number[], ranks: number[]): RankResponse => ({
  alternatives,
  closeness,
  ranks,
  options: { ideal_mode: 'honor-kinds', distance: 'euclidean', normalize_weights: false },
  weights_rescaled: false,
  version: 'test',
});

describe('renderRanking', () => {
  it('sorts bars by server-assigned rank', () => {
    const bars = renderRanking(response(['a', 'b', 'c'], [0.2, 0.9, 0.5], [3, 1, 2]), null);
    expect(bars.map((b) => b.alternative)).toEqual(['b', 'c', 'a']);
    expect(bars.map((b) => b.rank)).toEqual([1, 2, 3]);
  });

  it('labels closeness at 4 decimals, rounded upward like the engine tables', () => {
    expect(formatCloseness(0.9198980713025264)).toBe('0.9199');
    expect(formatCloseness(0.17011)).toBe('0.1702');
    expect(formatCloseness(1)).toBe('1.0000');
    expect(formatCloseness(0)).toBe('0.0000');
  });

  it('keeps input order for equal closeness (ranks already encode it)', () => {
    const bars = renderRanking(response(['a', 'b', 'c'], [0.5, 0.5, 0.5], [1, 2, 3]), null);
    expect(bars.map((b) => b.alternative)).toEqual(['a', 'b', 'c']);
  });

  it('renders a single alternative as one full-width bar', () => {
    const bars = renderRanking(response(['only'], [0.42], [1]), null);
    expect(bars).toHaveLength(1);
    expect(bars[0]!.widthPct).toBe(100);
  });

  it('scales bar widths relative to the best closeness', () => {
    const bars = renderRanking(response(['a', 'b'], [0.8, 0.4], [1, 2]), null);
    expect(bars[0]!.widthPct).toBe(100);
    expect(bars[1]!.widthPct).toBeCloseTo(50, 9);
  });

  it('reports rank deltas against the previous response', () => {
    const before = response(['a', 'b', 'c'], [0.9, 0.5, 0.2], [1, 2, 3]);
    const after = response(['a', 'b', 'c'], [0.3, 0.6, 0.8], [3, 2, 1]);
    const bars = renderRanking(after, before);
    const byName = Object.fromEntries(bars.map((b) => [b.alternative, b.delta]));
    expect(byName).toEqual({ a: -2, b: 0, c: 2 });
  });

  it('first render carries null deltas', () => {
    const bars = renderRanking(response(['a'], [0.42], [1]), null);
    expect(bars[0]!.delta).toBeNull();
  });
});
