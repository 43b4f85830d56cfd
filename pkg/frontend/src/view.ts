// Pure presentation layer: SessionPayload in, ViewState out. No game
// logic lives here; every fact shown is a field the server sent, and the
// only computation is routing move labels to panels by their address
// prefixes (parallel parts "0.", "1.", ..., recurrence copies "<bits>.").

import type { HistoryEntry, SessionPayload, StructureNode } from './api.js';

export interface PanelEntry {
  by: 'T' | 'F';
  label: string; // residual label after the prefixes this panel consumed
  copy?: string; // recurrence copy address, when under a brec/corec panel
}

export interface Panel {
  heading: string;   // operator description, e.g. "parallel or", "your choice"
  formula: string;   // server-rendered subformula label
  entries: PanelEntry[];
  children: Panel[];
}

export interface ViewState {
  title: string;
  banner: string;
  finished: boolean;
  moveButtons: string[]; // exactly the API's legalHumanMoves, same order
  stopEnabled: boolean;
  history: HistoryEntry[];
  stateLabel: string;
  panels: Panel;
  notice: string | null; // dismissible error notice, when set
}

const SEAT = { T: 'machine', F: 'environment' } as const;

function heading(node: StructureNode): string {
  switch (node.kind) {
    case 'tree':
      return `move tree (${node.nodes} nodes, depth ${node.depth})`;
    case 'parallel':
      return node.flavor === 'conj' ? 'parallel and' : 'parallel or';
    case 'neg':
      return 'negation (roles swapped)';
    case 'brec':
      return node.flavor === 'corec'
        ? `corecurrence (machine may split, up to ${node.maxSplits})`
        : `recurrence (you may split, up to ${node.maxSplits})`;
    case 'choice':
      return node.chooser === 'F' ? 'your choice' : "machine's choice";
    case 'blind':
      return `blind ${node.flavor} over ${node.width} values (no moves)`;
    case 'leaf':
      return `settled: ${SEAT[node.winner ?? 'F']} holds it`;
  }
}

/** Route one history entry down the structure outline. Returns the panel
 * path (child indices from the root) plus the residual label to display. */
export function routeEntry(
  root: StructureNode,
  label: string,
): { path: number[]; label: string; copy?: string } {
  const path: number[] = [];
  let node = root;
  let rest = label;
  for (;;) {
    if (node.kind === 'parallel') {
      const m = /^(\d+)\.(.*)$/.exec(rest);
      const kids = node.children ?? [];
      if (m && Number(m[1]) < kids.length) {
        path.push(Number(m[1]));
        node = kids[Number(m[1])]!;
        rest = m[2]!;
        continue;
      }
      return { path, label: rest };
    }
    if (node.kind === 'neg' && node.children?.length) {
      path.push(0);
      node = node.children[0]!;
      continue;
    }
    if (node.kind === 'brec') {
      // splits and copy-addressed moves both render at the recurrence panel
      const copy = /^([01]*)\.(.*)$/.exec(rest);
      if (copy) return { path, label: copy[2]!, copy: copy[1]! };
      return { path, label: rest };
    }
    return { path, label: rest };
  }
}

function buildPanels(node: StructureNode, routed: Map<string, PanelEntry[]>, path: number[]): Panel {
  const key = path.join('.');
  return {
    heading: heading(node),
    formula: node.label,
    entries: routed.get(key) ?? [],
    children: (node.children ?? []).map((c, i) => buildPanels(c, routed, [...path, i])),
  };
}

function bannerText(s: SessionPayload): string {
  if (s.status === 'finished') {
    return s.winner === 'T' ? 'machine wins' : 'environment wins';
  }
  const stop = `stopping now: ${SEAT[s.stopWinnerNow]} wins`;
  if (s.machineWinnable === null) return `in play (${stop})`;
  const strength = s.machineWinnable
    ? `machine holds a winning strategy (${s.strategyKind})`
    : `machine cannot force a win (${s.strategyKind})`;
  return `in play; ${strength}; ${stop}`;
}

export function renderState(s: SessionPayload, notice: string | null = null): ViewState {
  const routed = new Map<string, PanelEntry[]>();
  for (const entry of s.history) {
    const r = routeEntry(s.structure, entry.label);
    const key = r.path.join('.');
    const list = routed.get(key) ?? [];
    list.push({ by: entry.by, label: r.label, copy: r.copy });
    routed.set(key, list);
  }
  return {
    title: s.structure.label,
    banner: bannerText(s),
    finished: s.status === 'finished',
    moveButtons: [...s.legalHumanMoves],
    stopEnabled: s.status === 'open',
    history: s.history.map((h) => ({ ...h })),
    stateLabel: s.stateLabel,
    panels: buildPanels(s.structure, routed, []),
    notice,
  };
}
