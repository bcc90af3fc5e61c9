/**
 * Wire types shared with the ranking service.  The problem document is the
 * same structured-object format the service and CLI consume.
 */

export type CriterionKind = 'benefit' | 'cost';
export type IdealMode = 'honor-kinds' | 'all-benefit';
export type DistanceMode = 'euclidean' | 'squared';

export interface CriterionDoc {
  name: string;
  kind: CriterionKind;
  weight: number;
}

export interface ProblemDocument {
  criteria: CriterionDoc[];
  alternatives: string[];
  scores: number[][];
}

export interface RankOptions {
  ideal_mode: IdealMode;
  distance: DistanceMode;
}

export interface RankResponse {
  alternatives: string[];
  closeness: number[];
  ranks: number[];
  options: RankOptions & { normalize_weights: boolean };
  weights_rescaled: boolean;
  version: string;
}

export interface ServiceViolation {
  code: string;
  path: string;
  message: string;
}

export interface ServiceErrorBody {
  error: string;
  violations: ServiceViolation[];
}
