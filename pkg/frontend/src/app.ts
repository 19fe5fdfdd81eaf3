import {
  ApiClient,
  ApiError,
  Question,
  Recommendation,
  SessionEnvelope,
  TranscriptEntry,
} from "./api";
import { escapeHtml, highlightKeywords } from "./highlight";

// One clarification dialogue from the query box to the results pane.
// All content is server-supplied; this class only renders envelopes and
// posts selections back.
export class DialogueApp {
  client: ApiClient;
  sessionId: string | null = null;
  question: Question | null = null;
  recommendation: Recommendation | null = null;
  transcript: TranscriptEntry[] = [];
  pending = false;

  private queryInput: HTMLInputElement;
  private queryError: HTMLElement;
  private dialoguePane: HTMLElement;
  private questionText: HTMLElement;
  private optionsBox: HTMLElement;
  private transcriptList: HTMLElement;
  private resultsPane: HTMLElement;
  private banner: HTMLElement;
  private bannerText: HTMLElement;
  private retryAction: (() => void) | null = null;

  constructor(root: Document, client: ApiClient) {
    this.client = client;
    this.queryInput = root.getElementById("query") as HTMLInputElement;
    this.queryError = root.getElementById("query-error")!;
    this.dialoguePane = root.getElementById("dialogue")!;
    this.questionText = root.getElementById("question-text")!;
    this.optionsBox = root.getElementById("options")!;
    this.transcriptList = root.getElementById("transcript")!;
    this.resultsPane = root.getElementById("results")!;
    this.banner = root.getElementById("banner")!;
    this.bannerText = root.getElementById("banner-text")!;

    root.getElementById("start")!.addEventListener("click", () => this.startDialogue());
    this.queryInput.addEventListener("keydown", (event) => {
      if ((event as KeyboardEvent).key === "Enter") this.startDialogue();
    });
    root.getElementById("stop-btn")!.addEventListener("click", () => this.stopDialogue());
    root.getElementById("retry")!.addEventListener("click", () => {
      const action = this.retryAction;
      this.hideBanner();
      if (action) action();
    });
  }

  async startDialogue(): Promise<void> {
    const query = this.queryInput.value.trim();
    if (!query) {
      this.queryError.textContent = "Type a query first.";
      this.queryError.hidden = false;
      return; // no request for a blank query
    }
    this.queryError.hidden = true;
    this.hideBanner();
    this.resultsPane.hidden = true;
    try {
      this.apply(await this.client.createSession(query));
    } catch (err) {
      if (err instanceof ApiError && err.code === "no_candidates") {
        this.renderEmptyState(query);
        return;
      }
      this.showBanner(describe(err), () => this.startDialogue());
    }
  }

  async chooseOption(optionId: string): Promise<void> {
    if (this.pending || this.sessionId === null) return;
    this.pending = true;
    this.setOptionsDisabled(true);
    try {
      this.apply(await this.client.answer(this.sessionId, optionId));
    } catch (err) {
      // the transcript stays as rendered; only offer a way forward
      if (err instanceof ApiError && err.code === "session_finished") {
        this.showBanner("Session already finished.", () => this.refresh());
      } else {
        this.showBanner(describe(err), () => this.chooseOption(optionId));
      }
    } finally {
      this.pending = false;
      this.setOptionsDisabled(false);
    }
  }

  async stopDialogue(): Promise<void> {
    if (this.pending || this.sessionId === null) return;
    this.pending = true;
    try {
      this.apply(await this.client.stop(this.sessionId));
    } catch (err) {
      this.showBanner(describe(err), () => this.stopDialogue());
    } finally {
      this.pending = false;
    }
  }

  async refresh(): Promise<void> {
    if (this.sessionId === null) return;
    try {
      this.apply(await this.client.getSession(this.sessionId));
    } catch (err) {
      this.showBanner(describe(err), () => this.refresh());
    }
  }

  // ---------------------------------------------------------- rendering

  private apply(envelope: SessionEnvelope): void {
    this.sessionId = envelope.session.id;
    this.transcript = envelope.transcript;
    this.question = envelope.question ?? null;
    this.recommendation = envelope.recommendation ?? null;
    this.renderTranscript();
    if (this.question) {
      this.renderQuestion(this.question);
    } else if (this.recommendation) {
      this.renderRecommendation(this.recommendation);
    }
  }

  private renderTranscript(): void {
    this.transcriptList.textContent = "";
    for (const entry of this.transcript) {
      const item = document.createElement("li");
      const q = document.createElement("span");
      q.className = "asked";
      q.textContent = entry.question;
      const a = document.createElement("span");
      a.className = "answered";
      a.textContent = entry.selected_label;
      item.append(q, " → ", a);
      this.transcriptList.appendChild(item);
    }
  }

  private renderQuestion(question: Question): void {
    this.dialoguePane.hidden = false;
    this.resultsPane.hidden = true;
    this.questionText.textContent = question.text;
    this.optionsBox.textContent = "";
    for (const option of question.options) {
      const button = document.createElement("button");
      button.className = "option";
      button.dataset.optionId = option.id;
      button.textContent = `${option.label} (${option.api_count})`;
      button.addEventListener("click", () => this.chooseOption(option.id));
      this.optionsBox.appendChild(button);
    }
  }

  private renderRecommendation(rec: Recommendation): void {
    this.dialoguePane.hidden = this.transcript.length === 0;
    this.questionText.textContent = "";
    this.optionsBox.textContent = "";
    this.resultsPane.hidden = false;
    this.resultsPane.textContent = "";

    const heading = document.createElement("h2");
    heading.textContent = `Results (${rec.rounds} rounds)`;
    this.resultsPane.appendChild(heading);
    for (const card of rec.results) {
      this.resultsPane.appendChild(this.buildCard(card.fqn, card.description, card.keywords));
    }

    if (rec.extensions.length === 0) return; // section hidden entirely
    const extHeading = document.createElement("h2");
    extHeading.textContent = "Extended";
    this.resultsPane.appendChild(extHeading);

    let currentRelation: string | null = null;
    let group: HTMLElement | null = null;
    for (const card of rec.extensions) {
      if (card.relation !== currentRelation) {
        currentRelation = card.relation;
        group = document.createElement("div");
        group.className = "relation-group";
        const badge = document.createElement("span");
        badge.className = "badge";
        badge.textContent = card.relation;
        group.appendChild(badge);
        this.resultsPane.appendChild(group);
      }
      group!.appendChild(this.buildCard(card.fqn, card.description, card.keywords));
    }
  }

  private buildCard(fqn: string, description: string, keywords: { text: string; source: string }[]): HTMLElement {
    const card = document.createElement("article");
    card.className = "card";
    const name = document.createElement("code");
    name.className = "fqn";
    name.textContent = fqn;
    const copy = document.createElement("button");
    copy.className = "copy";
    copy.textContent = "copy";
    copy.addEventListener("click", () => {
      navigator.clipboard.writeText(fqn);
    });
    card.append(name, copy);
    if (description) {
      const body = document.createElement("p");
      body.innerHTML = highlightKeywords(description, keywords);
      card.appendChild(body);
    }
    return card;
  }

  private renderEmptyState(query: string): void {
    this.dialoguePane.hidden = true;
    this.resultsPane.hidden = false;
    this.resultsPane.innerHTML =
      `<p class="empty">No APIs found for “${escapeHtml(query)}”.` +
      ` Try describing the action differently.</p>`;
  }

  private setOptionsDisabled(disabled: boolean): void {
    for (const button of this.optionsBox.querySelectorAll("button")) {
      (button as HTMLButtonElement).disabled = disabled;
    }
  }

  private showBanner(message: string, retry: () => void): void {
    this.bannerText.textContent = message;
    this.banner.hidden = false;
    this.retryAction = retry;
  }

  private hideBanner(): void {
    this.banner.hidden = true;
    this.retryAction = null;
  }
}

function describe(err: unknown): string {
  if (err instanceof ApiError) return err.message;
  return "Request failed — is the server reachable?";
}
