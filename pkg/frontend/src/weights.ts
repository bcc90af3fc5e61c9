/**
 * Weight-vector arithmetic for the sliders.  Mirrors the engine's sweep
 * semantics: moving one weight rescales the others proportionally out of
 * the remaining mass, so the vector always sums to 1.
 */

export const WEIGHT_TOLERANCE = 1e-6;

export const clamp01 = (value: number): number => Math.min(1, Math.max(0, value));

/**
 * New weight vector with weights[index] = value and the rest rescaled
 * proportionally.  When the rest carries no weight, the remainder splits
 * equally (proportional rescaling is undefined on an all-zero rest).
 */
export const rescaleWeights = (weights: number[], index: number, value: number): number[] => {
  const target = clamp01(value);
  const rest = 1 - (weights[index] ?? 0);
  const out = weights.slice();
  out[index] = target;
  const others = weights.map((_, j) => j).filter((j) => j !== index);
  if (rest > 0) {
    const factor = (1 - target) / rest;
    for (const j of others) out[j] = (weights[j] ?? 0) * factor;
  } else {
    for (const j of others) out[j] = (1 - target) / others.length;
  }
  return out;
};

export const sumsToOne = (weights: number[]): boolean =>
  Math.abs(weights.reduce((a, b) => a + b, 0) - 1) <= WEIGHT_TOLERANCE;
