/**
 * Thin client for the ranking service.  The fetch implementation is
 * injectable so tests can substitute a scripted transport.
 */

import type { ProblemDocument, RankOptions, RankResponse, ServiceErrorBody, ServiceViolation } from './types.js';

export type FetchLike = (url: string, init: RequestInit) => Promise<Response>;

export class ServiceError extends Error {
  readonly status: number;
  readonly violations: ServiceViolation[];

  constructor(status: number, body: ServiceErrorBody | null) {
    const detail = body?.violations?.map((v) => `${v.code}: ${v.message}`).join('; ');
    super(detail || `service responded with status ${status}`);
    this.status = status;
    this.violations = body?.violations ?? [];
  }
}

export class RankServiceClient {
  private readonly baseUrl: string;
  private readonly fetchImpl: FetchLike;

  constructor(baseUrl: string, fetchImpl: FetchLike = (url, init) => fetch(url, init)) {
    this.baseUrl = baseUrl.replace(/\/+$/, '');
    this.fetchImpl = fetchImpl;
  }

  async rank(problem: ProblemDocument, options: RankOptions): Promise<RankResponse> {
    const response = await this.fetchImpl(`${this.baseUrl}/api/v1/rank`, {
      method: 'POST',
      headers: { 'content-type': 'application/json' },
      body: JSON.stringify({ problem, options }),
    });
    if (!response.ok) {
      const body = (await response.json().catch(() => null)) as ServiceErrorBody | null;
      throw new ServiceError(response.status, body);
    }
    return (await response.json()) as RankResponse;
  }

  async health(): Promise<boolean> {
    try {
      const response = await this.fetchImpl(`${this.baseUrl}/api/v1/health`, { method: 'GET' });
      return response.ok;
    } catch {
      return false;
    }
  }
}
