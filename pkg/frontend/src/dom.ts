// Thin DOM renderer over ViewState. Rebuilds the session area on every
// round-trip; at desk scale the trees are tiny and a full rebuild keeps
// this layer free of state.

import type { Panel, ViewState } from './view.js';

export interface Handlers {
  onMove: (label: string) => void;
  onStop: () => void;
  onDismiss: () => void;
}

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

function renderPanel(panel: Panel): HTMLElement {
  const box = el('div', 'panel');
  box.appendChild(el('div', 'panel-heading', panel.heading));
  if (panel.formula) box.appendChild(el('code', 'panel-formula', panel.formula));
  if (panel.entries.length) {
    const list = el('ul', 'panel-moves');
    for (const entry of panel.entries) {
      const seat = entry.by === 'T' ? 'machine' : 'you';
      const copy = entry.copy !== undefined ? `[copy ${entry.copy || 'root'}] ` : '';
      list.appendChild(el('li', `move-${entry.by}`, `${seat}: ${copy}${entry.label || '(split)'}`));
    }
    box.appendChild(list);
  }
  if (panel.children.length) {
    const kids = el('div', 'panel-children');
    for (const child of panel.children) kids.appendChild(renderPanel(child));
    box.appendChild(kids);
  }
  return box;
}

export function render(root: HTMLElement, vs: ViewState | null, handlers: Handlers): void {
  root.replaceChildren();
  if (!vs) {
    root.appendChild(el('p', 'empty', 'No session. Pick a fixture or enter a formula.'));
    return;
  }

  if (vs.notice) {
    const notice = el('div', 'notice');
    notice.appendChild(el('span', undefined, vs.notice));
    const dismiss = el('button', 'dismiss', 'dismiss');
    dismiss.addEventListener('click', handlers.onDismiss);
    notice.appendChild(dismiss);
    root.appendChild(notice);
  }

  root.appendChild(el('h2', 'title', vs.title));
  root.appendChild(el('div', vs.finished ? 'banner finished' : 'banner', vs.banner));

  const controls = el('div', 'controls');
  for (const label of vs.moveButtons) {
    const btn = el('button', 'move-btn', label);
    btn.addEventListener('click', () => handlers.onMove(label));
    controls.appendChild(btn);
  }
  const stop = el('button', 'stop-btn', 'stop here');
  stop.disabled = !vs.stopEnabled;
  stop.addEventListener('click', handlers.onStop);
  controls.appendChild(stop);
  root.appendChild(controls);

  root.appendChild(renderPanel(vs.panels));

  const strip = el('div', 'history');
  strip.appendChild(el('span', 'history-head', vs.history.length ? 'run:' : 'run: (empty)'));
  for (const h of vs.history) {
    strip.appendChild(el('span', `chip chip-${h.by}`, `${h.by}:${h.label}`));
  }
  root.appendChild(strip);
}
