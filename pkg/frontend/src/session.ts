/**
 * What-if session state and request orchestration.
 *
 * The panel never computes rankings itself: every displayed number comes
 * from a service response.  Edits are debounced (150 ms by default), at
 * most one request is in flight at a time (the newest edit waits its turn
 * and supersedes anything queued), and responses are applied atomically
 * under a monotonically increasing request id so an out-of-order reply can
 * never clobber a newer one.
 */

import { RankServiceClient, ServiceError } from './api.js';
import { caseStudyFixture, cloneProblem } from './fixture.js';
import type {
  CriterionKind,
  DistanceMode,
  IdealMode,
  ProblemDocument,
  RankOptions,
  RankResponse,
} from './types.js';
import { clamp01, rescaleWeights } from './weights.js';

export interface SessionState {
  problem: ProblemDocument;
  options: RankOptions;
  /** Ranking currently on screen: always one complete response, never a mix. */
  lastResponse: RankResponse | null;
  /** The response shown before lastResponse; drives rank-change deltas. */
  previousResponse: RankResponse | null;
  /** A request is in flight or waiting in the debounce window. */
  pending: boolean;
  error: string | null;
}

export interface SessionConfig {
  debounceMs?: number;
  fixture?: ProblemDocument;
}

export class WhatIfSession {
  private readonly client: RankServiceClient;
  private readonly debounceMs: number;
  private readonly fixture: ProblemDocument;

  private readonly state: SessionState;
  private listeners: Array<(state: SessionState) => void> = [];

  private lastIssuedId = 0;
  private lastAppliedId = 0;
  private inFlight = false;
  private queued = false;
  private debounceTimer: ReturnType<typeof setTimeout> | null = null;
  private idleWaiters: Array<() => void> = [];

  constructor(client: RankServiceClient, config: SessionConfig = {}) {
    this.client = client;
    this.debounceMs = config.debounceMs ?? 150;
    this.fixture = config.fixture ?? caseStudyFixture();
    this.state = {
      problem: cloneProblem(this.fixture),
      options: { ideal_mode: 'honor-kinds', distance: 'euclidean' },
      lastResponse: null,
      previousResponse: null,
      pending: false,
      error: null,
    };
  }

  getState(): Readonly<SessionState> {
    return this.state;
  }

  subscribe(listener: (state: SessionState) => void): () => void {
    this.listeners.push(listener);
    return () => {
      this.listeners = this.listeners.filter((l) => l !== listener);
    };
  }

  /** Reset to the pristine bundled fixture and request its ranking. */
  loadFixture(): void {
    this.state.problem = cloneProblem(this.fixture);
    this.state.error = null;
    this.notify();
    this.requestNow();
  }

  /** Move one weight slider; the others rescale to keep the sum at 1. */
  setWeight(index: number, value: number): void {
    const weights = this.state.problem.criteria.map((c) => c.weight);
    const next = rescaleWeights(weights, index, value);
    this.state.problem.criteria.forEach((criterion, j) => {
      criterion.weight = next[j] ?? 0;
    });
    this.notify();
    this.scheduleRequest();
  }

  /** Replace the whole weight vector (e.g. restoring the original). */
  setWeights(weights: number[]): void {
    this.state.problem.criteria.forEach((criterion, j) => {
      criterion.weight = clamp01(weights[j] ?? 0);
    });
    this.notify();
    this.scheduleRequest();
  }

  setScore(row: number, column: number, value: number): void {
    const scores = this.state.problem.scores[row];
    if (!scores || column >= scores.length) return;
    scores[column] = value;
    this.notify();
    this.scheduleRequest();
  }

  setKind(index: number, kind: CriterionKind): void {
    const criterion = this.state.problem.criteria[index];
    if (!criterion) return;
    criterion.kind = kind;
    this.notify();
    this.scheduleRequest();
  }

  setIdealMode(mode: IdealMode): void {
    this.state.options.ideal_mode = mode;
    this.notify();
    this.scheduleRequest();
  }

  setDistance(distance: DistanceMode): void {
    this.state.options.distance = distance;
    this.notify();
    this.scheduleRequest();
  }

  /** Resolves once no request is in flight, queued, or debouncing. */
  whenIdle(): Promise<void> {
    if (!this.state.pending) return Promise.resolve();
    return new Promise((resolve) => this.idleWaiters.push(resolve));
  }

  /** Issue a request immediately, bypassing the debounce window. */
  requestNow(): void {
    if (this.debounceTimer !== null) {
      clearTimeout(this.debounceTimer);
      this.debounceTimer = null;
    }
    this.state.pending = true;
    this.fire();
  }

  /**
   * Apply a ranking response for a given request id.  Stale responses
   * (id at or below the newest applied) are discarded; fresh ones replace
   * the displayed ranking in a single assignment.  Exposed so tests can
   * inject out-of-order replies.
   */
  applyResponse(id: number, response: RankResponse): void {
    if (id <= this.lastAppliedId) return;
    this.lastAppliedId = id;
    this.state.previousResponse = this.state.lastResponse;
    this.state.lastResponse = response;
    this.state.error = null;
    this.notify();
  }

  private applyError(id: number, error: unknown): void {
    if (id <= this.lastAppliedId) return;
    this.lastAppliedId = id;
    this.state.error =
      error instanceof ServiceError
        ? error.message
        : 'service unreachable; showing the last completed ranking';
    this.notify();
  }

  private scheduleRequest(): void {
    this.state.pending = true;
    if (this.debounceTimer !== null) clearTimeout(this.debounceTimer);
    this.debounceTimer = setTimeout(() => {
      this.debounceTimer = null;
      this.fire();
    }, this.debounceMs);
    this.notify();
  }

  private fire(): void {
    if (this.inFlight) {
      this.queued = true;
      return;
    }
    this.send();
  }

  private send(): void {
    this.inFlight = true;
    const id = ++this.lastIssuedId;
    const snapshot = cloneProblem(this.state.problem);
    const options: RankOptions = { ...this.state.options };
    this.client
      .rank(snapshot, options)
      .then((response) => this.applyResponse(id, response))
      .catch((error) => this.applyError(id, error))
      .then(() => this.finish());
  }

  private finish(): void {
    this.inFlight = false;
    if (this.queued) {
      this.queued = false;
      this.send();
      return;
    }
    if (this.debounceTimer === null) {
      this.state.pending = false;
      this.notify();
      const waiters = this.idleWaiters;
      this.idleWaiters = [];
      for (const resolve of waiters) resolve();
    }
  }

  private notify(): void {
    for (const listener of this.listeners) listener(this.state);
  }
}
