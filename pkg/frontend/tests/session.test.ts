import { afterEach, beforeEach, describe, expect, it, vi } from 'vitest';

import { RankServiceClient } from '../src/api.js';
import { WhatIfSession } from '../src/session.js';
import type { ProblemDocument, RankResponse } from '../src/types.js';
import { sumsToOne } from '../src/weights.js';

const cannedResponse = (problem: ProblemDocument, tag: string): RankResponse => ({
  alternatives: [...problem.alternatives],
  closeness: problem.alternatives.map((_, i) => 1 - i / 10),
  ranks: problem.alternatives.map((_, i) => i + 1),
  options: { ideal_mode: 'honor-kinds', distance: 'euclidean', normalize_weights: false },
  weights_rescaled: false,
  version: tag,
});

const jsonResponse = (body: unknown, status = 200): Response =>
  ({
    ok: status >= 200 && status < 300,
    status,
    json: async () => body,
  }) as unknown as Response;

interface Deferred {
  resolve: (r: Response) => void;
  reject: (e: unknown) => void;
}

/** Scripted transport: records request bodies, can hold responses open. */
class ScriptedTransport {
  bodies: Array<{ problem: ProblemDocument; options: unknown }> = [];
  deferreds: Deferred[] = [];
  manual = false;
  failWith: unknown = null;
  inFlight = 0;
  maxInFlight = 0;

  fetch = (_url: string, init: RequestInit): Promise<Response> => {
    const body = JSON.parse(String(init.body));
    this.bodies.push(body);
    this.inFlight += 1;
    this.maxInFlight = Math.max(this.maxInFlight, this.inFlight);
    const settle = <T>(p: Promise<T>): Promise<T> =>
      p.finally(() => {
        this.inFlight -= 1;
      });
    if (this.failWith) {
      return settle(Promise.reject(this.failWith));
    }
    if (this.manual) {
      return settle(
        new Promise<Response>((resolve, reject) => {
          this.deferreds.push({ resolve, reject });
        })
      );
    }
    return settle(Promise.resolve(jsonResponse(cannedResponse(body.problem, `auto-${this.bodies.length}`))));
  };
}

const makeSession = (transport: ScriptedTransport, debounceMs = 150) =>
  new WhatIfSession(new RankServiceClient('http://service.test', transport.fetch), { debounceMs });

describe('WhatIfSession', () => {
  beforeEach(() => {
    vi.useFakeTimers();
  });
  afterEach(() => {
    vi.useRealTimers();
  });

  it('loads the bundled fixture: 6x4 grid with weights 0.5/0.1/0.3/0.1', async () => {
    const transport = new ScriptedTransport();
    const session = makeSession(transport);
    session.loadFixture();
    await vi.runAllTimersAsync();
    await session.whenIdle();
    const { problem, lastResponse } = session.getState();
    expect(problem.alternatives).toHaveLength(6);
    expect(problem.criteria.map((c) => c.weight)).toEqual([0.5, 0.1, 0.3, 0.1]);
    expect(problem.scores[0]).toEqual([7, 6, 7, 7]);
    expect(lastResponse?.version).toBe('auto-1');
  });

  it('reloading after edits restores the pristine fixture', async () => {
    const transport = new ScriptedTransport();
    const session = makeSession(transport);
    session.loadFixture();
    await vi.runAllTimersAsync();
    session.setScore(0, 0, 2);
    session.setWeight(1, 0.9);
    await vi.runAllTimersAsync();
    expect(session.getState().problem.scores[0]?.[0]).toBe(2);
    session.loadFixture();
    await vi.runAllTimersAsync();
    expect(session.getState().problem.scores[0]?.[0]).toBe(7);
    expect(session.getState().problem.criteria.map((c) => c.weight)).toEqual([0.5, 0.1, 0.3, 0.1]);
  });

  it('debounces a rapid drag into a single request at the final value', async () => {
    const transport = new ScriptedTransport();
    const session = makeSession(transport);
    session.loadFixture();
    await vi.runAllTimersAsync();
    transport.bodies.length = 0;

    session.setWeight(0, 0.6);
    vi.advanceTimersByTime(60);
    session.setWeight(0, 0.8);
    vi.advanceTimersByTime(60);
    session.setWeight(0, 1.0);
    expect(session.getState().pending).toBe(true);
    await vi.runAllTimersAsync();
    await session.whenIdle();

    expect(transport.bodies).toHaveLength(1);
    const sent = transport.bodies[0]!.problem.criteria.map((c) => c.weight);
    expect(sent).toEqual([1, 0, 0, 0]);
    expect(session.getState().pending).toBe(false);
  });

  it('keeps the weight vector summing to 1 through any drag sequence', async () => {
    const transport = new ScriptedTransport();
    const session = makeSession(transport);
    session.loadFixture();
    for (const [index, value] of [
      [0, 0.9],
      [2, 0.1],
      [3, 0.7],
      [1, 0.0],
      [0, 1.0],
      [0, 0.25],
    ] as Array<[number, number]>) {
      session.setWeight(index, value);
      expect(sumsToOne(session.getState().problem.criteria.map((c) => c.weight))).toBe(true);
    }
    await vi.runAllTimersAsync();
  });

  it('allows at most one in-flight request; the newest edit wins', async () => {
    const transport = new ScriptedTransport();
    transport.manual = true;
    const session = makeSession(transport);

    session.setWeight(0, 0.8);
    await vi.advanceTimersByTimeAsync(150);
    expect(transport.bodies).toHaveLength(1);

    session.setWeight(0, 1.0);
    await vi.advanceTimersByTimeAsync(150);
    // second request must wait for the first to settle
    expect(transport.bodies).toHaveLength(1);

    transport.deferreds[0]!.resolve(jsonResponse(cannedResponse(transport.bodies[0]!.problem, 'first')));
    await vi.runAllTimersAsync();
    expect(transport.bodies).toHaveLength(2);
    transport.deferreds[1]!.resolve(jsonResponse(cannedResponse(transport.bodies[1]!.problem, 'second')));
    await vi.runAllTimersAsync();
    await session.whenIdle();

    expect(transport.maxInFlight).toBe(1);
    expect(session.getState().lastResponse?.version).toBe('second');
    expect(transport.bodies[1]!.problem.criteria.map((c) => c.weight)).toEqual([1, 0, 0, 0]);
  });

  it('discards out-of-order responses by request id', () => {
    const transport = new ScriptedTransport();
    const session = makeSession(transport);
    const fresh = cannedResponse(session.getState().problem, 'fresh');
    const stale = cannedResponse(session.getState().problem, 'stale');
    session.applyResponse(7, fresh);
    session.applyResponse(3, stale);
    expect(session.getState().lastResponse).toBe(fresh);
  });

  it('replaces the displayed ranking atomically and tracks the previous one', () => {
    const transport = new ScriptedTransport();
    const session = makeSession(transport);
    const first = cannedResponse(session.getState().problem, 'one');
    const second = cannedResponse(session.getState().problem, 'two');
    session.applyResponse(1, first);
    session.applyResponse(2, second);
    expect(session.getState().lastResponse).toBe(second);
    expect(session.getState().previousResponse).toBe(first);
  });

  it('keeps the grid editable and the old ranking visible when the service is down', async () => {
    const transport = new ScriptedTransport();
    const session = makeSession(transport);
    session.loadFixture();
    await vi.runAllTimersAsync();
    const shown = session.getState().lastResponse;

    transport.failWith = new TypeError('fetch failed');
    session.setWeight(0, 0.9);
    await vi.runAllTimersAsync();
    await session.whenIdle();

    const state = session.getState();
    expect(state.error).toMatch(/unreachable/);
    expect(state.lastResponse).toBe(shown);
    expect(state.problem.criteria[0]?.weight).toBeCloseTo(0.9, 12);
    // still editable: further changes go through once the service is back
    transport.failWith = null;
    session.setScore(1, 1, 4);
    await vi.runAllTimersAsync();
    await session.whenIdle();
    expect(session.getState().error).toBeNull();
  });

  it('sends kind toggles and option changes to the service', async () => {
    const transport = new ScriptedTransport();
    const session = makeSession(transport);
    session.loadFixture();
    await vi.runAllTimersAsync();
    transport.bodies.length = 0;

    session.setKind(3, 'benefit');
    await vi.runAllTimersAsync();
    expect(transport.bodies[0]!.problem.criteria[3]?.kind).toBe('benefit');

    session.setIdealMode('all-benefit');
    await vi.runAllTimersAsync();
    expect(transport.bodies[1]!.options).toMatchObject({ ideal_mode: 'all-benefit' });
  });
});
