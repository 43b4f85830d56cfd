// Session controller: the functions the buttons call, with no DOM in
// sight. Holds the single active session (one per tab) and the latest
// ViewState. Every action is a server round-trip; nothing is applied
// optimistically, so the view can never drift from the server.

import { ApiClient, ApiError } from './api.js';
import type { CreateRequest, SessionPayload } from './api.js';
import { renderState } from './view.js';
import type { ViewState } from './view.js';

export class SessionController {
  private payload: SessionPayload | null = null;
  private notice: string | null = null;

  constructor(private api: ApiClient) {}

  get sessionId(): string | null {
    return this.payload?.id ?? null;
  }

  view(): ViewState | null {
    return this.payload ? renderState(this.payload, this.notice) : null;
  }

  async newSession(req: CreateRequest): Promise<ViewState> {
    if (this.payload) {
      await this.api.deleteSession(this.payload.id).catch(() => {});
    }
    this.payload = await this.api.createSession(req);
    this.notice = null;
    return this.view()!;
  }

  /** A move button was clicked. Errors become a notice on the refreshed
   * view instead of throwing; a vanished session (404) reloads to null. */
  async clickMove(label: string): Promise<ViewState | null> {
    return this.submit((id) => this.api.move(id, label));
  }

  async clickStop(): Promise<ViewState | null> {
    return this.submit((id) => this.api.stop(id));
  }

  async refresh(): Promise<ViewState | null> {
    if (!this.payload) return null;
    try {
      this.payload = await this.api.getSession(this.payload.id);
    } catch (e) {
      if (e instanceof ApiError && e.status === 404) {
        this.payload = null; // session gone (server restart with no journal)
        return null;
      }
      throw e;
    }
    return this.view();
  }

  dismissNotice(): void {
    this.notice = null;
  }

  async close(): Promise<void> {
    if (!this.payload) return;
    await this.api.deleteSession(this.payload.id).catch(() => {});
    this.payload = null;
    this.notice = null;
  }

  private async submit(call: (id: string) => Promise<SessionPayload>): Promise<ViewState | null> {
    if (!this.payload) return null;
    try {
      this.payload = await call(this.payload.id);
      this.notice = null;
    } catch (e) {
      if (e instanceof ApiError) {
        if (e.status === 404) return this.refresh();
        this.notice = e.message;
        await this.refresh().catch(() => {});
      } else {
        throw e;
      }
    }
    return this.view();
  }
}
