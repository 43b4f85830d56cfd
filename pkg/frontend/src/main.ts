// Page wiring: one SessionController per tab, forms on the left, the
// live session area on the right.

import { ApiClient } from './api.js';
import { SessionController } from './controller.js';
import { render } from './dom.js';

const $ = (id: string): HTMLElement => document.getElementById(id)!;

const baseInput = $('base-url') as HTMLInputElement;
baseInput.value = `${location.protocol}//${location.hostname}:8000`;

let controller = new SessionController(new ApiClient(baseInput.value));

const handlers = {
  onMove: (label: string) => controller.clickMove(label).then(repaint),
  onStop: () => controller.clickStop().then(repaint),
  onDismiss: () => {
    controller.dismissNotice();
    repaint();
  },
};

function repaint(): void {
  render($('session'), controller.view(), handlers);
}

function fail(e: unknown): void {
  $('form-error').textContent = e instanceof Error ? e.message : String(e);
}

async function loadFixtures(): Promise<void> {
  const select = $('fixture-select') as HTMLSelectElement;
  const fixtures = await new ApiClient(baseInput.value).listFixtures();
  select.replaceChildren();
  for (const f of fixtures) {
    const opt = document.createElement('option');
    opt.value = f.name;
    opt.textContent = `${f.name} (${f.kind})`;
    select.appendChild(opt);
  }
}

baseInput.addEventListener('change', () => {
  controller = new SessionController(new ApiClient(baseInput.value));
  loadFixtures().catch(fail);
  repaint();
});

$('fixture-form').addEventListener('submit', (ev) => {
  ev.preventDefault();
  $('form-error').textContent = '';
  const fixture = ($('fixture-select') as HTMLSelectElement).value;
  controller.newSession({ fixture }).then(repaint).catch(fail);
});

$('formula-form').addEventListener('submit', (ev) => {
  ev.preventDefault();
  $('form-error').textContent = '';
  const formula = ($('formula-input') as HTMLInputElement).value;
  const budgetRaw = ($('budget-input') as HTMLInputElement).value;
  const interpRaw = ($('interp-input') as HTMLTextAreaElement).value.trim();
  const req: { formula: string; budget?: number; interp?: unknown } = { formula };
  if (budgetRaw) req.budget = Number(budgetRaw);
  if (interpRaw) {
    try {
      req.interp = JSON.parse(interpRaw);
    } catch {
      req.interp = interpRaw; // bundled interpretation name
    }
  }
  controller.newSession(req).then(repaint).catch(fail);
});

loadFixtures().catch(fail);
repaint();
