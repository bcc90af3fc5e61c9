/**
 * End-to-end scenario against the real ranking service: the panel's state
 * machine driving actual HTTP responses.  Covers the release scenario:
 * load the fixture, drag the first weight to 1.0, restore the original
 * weights, and survive an out-of-order response injection.
 */

import { spawn, type ChildProcess } from 'node:child_process';
import { readFileSync } from 'node:fs';
import { dirname, resolve } from 'node:path';
import { fileURLToPath } from 'node:url';

import { afterAll, beforeAll, describe, expect, it } from 'vitest';

import { RankServiceClient } from '../src/api.js';
import { caseStudyFixture } from '../src/fixture.js';
import { WhatIfSession } from '../src/session.js';
import type { RankResponse } from '../src/types.js';
import { sumsToOne } from '../src/weights.js';

const PORT = 8907;
const BASE = `http://127.0.0.1:${PORT}`;
let server: ChildProcess;

const sleep = (ms: number) => new Promise((r) => setTimeout(r, ms));

const waitHealthy = async (): Promise<void> => {
  for (let attempt = 0; attempt < 60; attempt++) {
    try {
      const response = await fetch(`${BASE}/api/v1/health`);
      if (response.ok) return;
    } catch {
      // not up yet
    }
    await sleep(250);
  }
  throw new Error('ranking service did not become healthy');
};

const directRank = async (weights: number[]): Promise<RankResponse> => {
  const problem = caseStudyFixture();
  problem.criteria.forEach((criterion, j) => {
    criterion.weight = weights[j] ?? 0;
  });
  const response = await fetch(`${BASE}/api/v1/rank`, {
    method: 'POST',
    headers: { 'content-type': 'application/json' },
    body: JSON.stringify({ problem, options: { ideal_mode: 'honor-kinds', distance: 'euclidean' } }),
  });
  expect(response.ok).toBe(true);
  return (await response.json()) as RankResponse;
};

beforeAll(async () => {
  server = spawn('idealrank', ['serve', '--port', String(PORT)], { stdio: 'ignore' });
  await waitHealthy();
}, 30_000);

afterAll(() => {
  server?.kill('SIGTERM');
});

describe('what-if scenario against the live service', () => {
  it('bundled fixture matches the repo fixture file', () => {
    const here = dirname(fileURLToPath(import.meta.url));
    const fromRepo = JSON.parse(readFileSync(resolve(here, '../../fixtures/paper-case'), 'utf-8'));
    expect(caseStudyFixture()).toEqual(fromRepo);
  });

  it('drag to full weight, restore, and survive stale responses', async () => {
    const session = new WhatIfSession(new RankServiceClient(BASE), { debounceMs: 10 });

    // load the fixture and take the baseline from the service
    session.loadFixture();
    await session.whenIdle();
    const baseline = session.getState().lastResponse;
    expect(baseline).not.toBeNull();
    expect(baseline!.ranks).toEqual([3, 2, 5, 1, 6, 4]);
    expect(baseline!.closeness).toEqual((await directRank([0.5, 0.1, 0.3, 0.1])).closeness);

    // drag the first criterion's weight to 1.0 in a few quick steps
    for (const value of [0.7, 0.9, 1.0]) {
      session.setWeight(0, value);
    }
    expect(sumsToOne(session.getState().problem.criteria.map((c) => c.weight))).toBe(true);
    await session.whenIdle();

    const atFull = session.getState().lastResponse!;
    const expected = await directRank([1, 0, 0, 0]);
    expect(atFull.closeness).toEqual(expected.closeness);
    expect(atFull.ranks).toEqual(expected.ranks);
    // the two top scorers tie at closeness 1; input order breaks the tie
    expect(atFull.closeness[1]).toBe(1);
    expect(atFull.closeness[3]).toBe(1);
    expect(atFull.ranks[1]).toBe(1); // Supplier relationship
    expect(atFull.ranks[3]).toBe(2); // Inventory planning
    expect(atFull.closeness[4]).toBe(0); // 5S, the lone 6-scorer

    // restoring the original weights restores the baseline ranking
    session.setWeights([0.5, 0.1, 0.3, 0.1]);
    await session.whenIdle();
    const restored = session.getState().lastResponse!;
    expect(restored.ranks).toEqual(baseline!.ranks);
    expect(restored.closeness).toEqual(baseline!.closeness);

    // an out-of-order (stale) response cannot clobber the newest one
    const stale: RankResponse = { ...atFull, version: 'stale-injection' };
    session.applyResponse(1, stale);
    expect(session.getState().lastResponse).toBe(restored);
  }, 30_000);
});
