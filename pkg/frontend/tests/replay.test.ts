// Replay fidelity against a live server: a scripted sequence of UI
// clicks must leave the server holding a transcript identical to one
// produced by driving the API directly with the same script.

import { afterAll, beforeAll, describe, expect, it } from 'vitest';
import { spawn, type ChildProcess } from 'node:child_process';
import { setTimeout as sleep } from 'node:timers/promises';
import { ApiClient } from '../src/api.js';
import type { SessionPayload } from '../src/api.js';
import { SessionController } from '../src/controller.js';
import type { ViewState } from '../src/view.js';

const PORT = 8640 + (process.pid % 47);
const BASE = `http://127.0.0.1:${PORT}`;

let server: ChildProcess;

beforeAll(async () => {
  server = spawn('col', ['serve', '--port', String(PORT)], { stdio: 'ignore' });
  const api = new ApiClient(BASE);
  for (let i = 0; i < 150; i++) {
    try {
      await api.listFixtures();
      return;
    } catch {
      await sleep(100);
    }
  }
  throw new Error(`col serve did not come up on :${PORT}`);
}, 30000);

afterAll(() => {
  server?.kill();
});

/** The server-side transcript of a session, id stripped for comparison. */
async function transcript(api: ApiClient, id: string) {
  const s: SessionPayload = await api.getSession(id);
  return {
    status: s.status,
    winner: s.winner,
    stateLabel: s.stateLabel,
    history: s.history,
  };
}

type Click = { move: string } | { stop: true };

async function driveApi(api: ApiClient, fixture: string, script: Click[]): Promise<string> {
  let s = await api.createSession({ fixture });
  for (const click of script) {
    s = 'stop' in click ? await api.stop(s.id) : await api.move(s.id, click.move);
  }
  return s.id;
}

async function driveUi(controller: SessionController, fixture: string, script: Click[]): Promise<void> {
  let vs: ViewState | null = await controller.newSession({ fixture });
  for (const click of script) {
    if ('stop' in click) {
      expect(vs!.stopEnabled).toBe(true);
      vs = await controller.clickStop();
      continue;
    }
    // clicks can only land on buttons the view actually renders
    expect(vs!.moveButtons).toContain(click.move);
    vs = await controller.clickMove(click.move);
    expect(vs?.notice ?? null).toBeNull();
  }
}

describe('UI replay fidelity', () => {
  it('fig1: clicking gamma then stop matches the API-driven golden run', async () => {
    const api = new ApiClient(BASE);
    const script: Click[] = [{ move: 'gamma' }, { stop: true }];

    const goldenId = await driveApi(api, 'fig1', script);

    const controller = new SessionController(new ApiClient(BASE));
    const created = await controller.newSession({ fixture: 'fig1' });
    // the fixture opens with the machine's alpha and offers beta | gamma
    expect(created.moveButtons).toEqual(['beta', 'gamma']);
    expect(created.history).toEqual([{ by: 'T', label: 'alpha' }]);
    await driveUi(controller, 'fig1', script);

    const g = await transcript(api, goldenId);
    const u = await transcript(api, controller.sessionId!);
    expect(u).toEqual(g);
    expect(u.status).toBe('finished');
    // clicking gamma drew the machine's beta reply before the stop
    expect(u.history).toEqual([
      { by: 'T', label: 'alpha' },
      { by: 'F', label: 'gamma' },
      { by: 'T', label: 'beta' },
    ]);
  });

  it('copycat: a full mirrored exchange stays in lockstep with the API run', async () => {
    const api = new ApiClient(BASE);
    const script: Click[] = [
      { move: '1.gamma' },
      { move: '0.alpha' },
      { move: '0.beta' },
      { stop: true },
    ];

    const goldenId = await driveApi(api, 'copycat', script);
    const controller = new SessionController(new ApiClient(BASE));
    await driveUi(controller, 'copycat', script);

    const g = await transcript(api, goldenId);
    const u = await transcript(api, controller.sessionId!);
    expect(u).toEqual(g);
    expect(u.status).toBe('finished');
    // every environment move got a mirrored machine reply on the twin board
    for (let i = 0; i < u.history.length; i += 2) {
      const env = u.history[i]!;
      const echo = u.history[i + 1]!;
      expect(env.by).toBe('F');
      expect(echo.by).toBe('T');
      const flip = (l: string) => (l.startsWith('0.') ? '1.' + l.slice(2) : '0.' + l.slice(2));
      expect(echo.label).toBe(flip(env.label));
    }
  });

  it('surfaces an illegal click as a notice and keeps the server state', async () => {
    const controller = new SessionController(new ApiClient(BASE));
    const before = await controller.newSession({ fixture: 'fig1' });
    const after = await controller.clickMove('nonsense');
    expect(after?.notice).toMatch(/not legal/i);
    expect(after?.history).toEqual(before.history);
    const again = await controller.clickMove('gamma');
    expect(again?.notice ?? null).toBeNull();
    await controller.close();
  });
});
