/**
 * The bundled case study: six supply-chain improvement factors scored 1-9
 * against four criteria.  Mirrors fixtures/paper-case in the repo root;
 * the panel owns its copy so it stays usable with the service offline.
 */

import type { ProblemDocument } from './types.js';

export const caseStudyFixture = (): ProblemDocument => ({
  criteria: [
    { name: 'On-time delivery', kind: 'benefit', weight: 0.5 },
    { name: 'Production flexibility', kind: 'benefit', weight: 0.1 },
    { name: 'Cost effectiveness', kind: 'benefit', weight: 0.3 },
    { name: 'Additional cost', kind: 'cost', weight: 0.1 },
  ],
  alternatives: [
    'On-time information sharing',
    'Supplier relationship',
    'Information technology',
    'Inventory planning',
    '5S in the shop floor',
    'Overall labour effectiveness',
  ],
  scores: [
    [7, 6, 7, 7],
    [8, 8, 7, 6],
    [7, 6, 6, 6],
    [8, 7, 8, 6],
    [6, 6, 6, 6],
    [7, 8, 6, 6],
  ],
});

export const cloneProblem = (problem: ProblemDocument): ProblemDocument => ({
  criteria: problem.criteria.map((c) => ({ ...c })),
  alternatives: [...problem.alternatives],
  scores: problem.scores.map((row) => [...row]),
});
