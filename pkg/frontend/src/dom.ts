/**
 * DOM painting for the what-if panel.  Everything here is write-only
 * rendering of SessionState + view models; all interaction flows back
 * through WhatIfSession.
 */

import type { WhatIfSession, SessionState } from './session.js';
import { renderRanking } from './view.js';

const el = <T extends HTMLElement>(id: string): T => {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing #${id}`);
  return node as T;
};

export function mountPanel(session: WhatIfSession): void {
  const grid = el<HTMLTableElement>('score-grid');
  const sliders = el<HTMLDivElement>('weight-sliders');
  const bars = el<HTMLDivElement>('ranking-bars');
  const banner = el<HTMLDivElement>('error-banner');
  const status = el<HTMLSpanElement>('status');
  const idealMode = el<HTMLSelectElement>('ideal-mode');
  const distance = el<HTMLSelectElement>('distance');
  const reset = el<HTMLButtonElement>('reset');

  idealMode.addEventListener('change', () =>
    session.setIdealMode(idealMode.value as 'honor-kinds' | 'all-benefit')
  );
  distance.addEventListener('change', () =>
    session.setDistance(distance.value as 'euclidean' | 'squared')
  );
  reset.addEventListener('click', () => session.loadFixture());

  const paintGrid = (state: SessionState): void => {
    const { problem } = state;
    const head = [
      '<tr><th>alternative</th>',
      ...problem.criteria.map(
        (c, j) => `<th>${c.name}<br><button class="kind" data-j="${j}">${c.kind}</button></th>`
      ),
      '</tr>',
    ].join('');
    const body = problem.alternatives
      .map((name, i) => {
        const cells = (problem.scores[i] ?? [])
          .map(
            (value, j) =>
              `<td><input class="score" data-i="${i}" data-j="${j}" type="number" min="1" max="9" step="1" value="${value}"></td>`
          )
          .join('');
        return `<tr><td class="alt">${name}</td>${cells}</tr>`;
      })
      .join('');
    grid.innerHTML = `<thead>${head}</thead><tbody>${body}</tbody>`;

    grid.querySelectorAll<HTMLInputElement>('input.score').forEach((input) => {
      input.addEventListener('change', () => {
        session.setScore(Number(input.dataset.i), Number(input.dataset.j), Number(input.value));
      });
    });
    grid.querySelectorAll<HTMLButtonElement>('button.kind').forEach((button) => {
      button.addEventListener('click', () => {
        const j = Number(button.dataset.j);
        const current = session.getState().problem.criteria[j]?.kind ?? 'benefit';
        session.setKind(j, current === 'benefit' ? 'cost' : 'benefit');
      });
    });
  };

  const paintSliders = (state: SessionState): void => {
    sliders.innerHTML = state.problem.criteria
      .map(
        (c, j) => `
        <label class="slider">
          <span class="name">${c.name}</span>
          <input type="range" min="0" max="1" step="0.01" value="${c.weight}" data-j="${j}">
          <span class="value" data-j="${j}">${c.weight.toFixed(2)}</span>
        </label>`
      )
      .join('');
    sliders.querySelectorAll<HTMLInputElement>('input[type=range]').forEach((slider) => {
      slider.addEventListener('input', () => {
        session.setWeight(Number(slider.dataset.j), Number(slider.value));
      });
    });
  };

  const syncSliders = (state: SessionState): void => {
    sliders.querySelectorAll<HTMLInputElement>('input[type=range]').forEach((slider) => {
      const j = Number(slider.dataset.j);
      const weight = state.problem.criteria[j]?.weight ?? 0;
      // never fight the slider the analyst is currently dragging
      if (document.activeElement !== slider) slider.value = String(weight);
    });
    sliders.querySelectorAll<HTMLSpanElement>('span.value').forEach((label) => {
      const j = Number(label.dataset.j);
      label.textContent = (state.problem.criteria[j]?.weight ?? 0).toFixed(2);
    });
  };

  const paintRanking = (state: SessionState): void => {
    if (!state.lastResponse) {
      bars.innerHTML = '<p class="placeholder">waiting for the first ranking…</p>';
      return;
    }
    bars.innerHTML = renderRanking(state.lastResponse, state.previousResponse)
      .map((bar) => {
        const delta =
          bar.delta === null || bar.delta === 0
            ? ''
            : `<span class="delta ${bar.delta > 0 ? 'up' : 'down'}">${bar.delta > 0 ? '▲' : '▼'}${Math.abs(bar.delta)}</span>`;
        return `
          <div class="bar-row">
            <span class="rank">#${bar.rank}</span>
            <span class="name">${bar.alternative}${delta}</span>
            <div class="bar"><div class="fill" style="width:${bar.widthPct.toFixed(1)}%"></div></div>
            <span class="closeness">${bar.label}</span>
          </div>`;
      })
      .join('');
  };

  const structureKey = (state: SessionState): string =>
    JSON.stringify([
      state.problem.alternatives,
      state.problem.criteria.map((c) => [c.name, c.kind]),
      state.problem.scores,
    ]);

  let lastStructure = '';
  session.subscribe((state) => {
    banner.textContent = state.error ?? '';
    banner.style.display = state.error ? 'block' : 'none';
    status.textContent = state.pending ? 'computing…' : 'idle';
    const structure = structureKey(state);
    if (structure !== lastStructure) {
      // grid and slider skeletons only rebuild when the document structure
      // changes, so typing and dragging are not interrupted
      paintGrid(state);
      paintSliders(state);
      lastStructure = structure;
    }
    syncSliders(state);
    paintRanking(state);
  });

  paintGrid(session.getState());
  paintSliders(session.getState());
  paintRanking(session.getState());
  lastStructure = structureKey(session.getState());
}
