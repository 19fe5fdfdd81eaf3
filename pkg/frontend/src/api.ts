// Thin typed wrapper over the session service. No retries, no caching:
// the app layer decides what a failure means.

export interface SessionInfo {
  id: string;
  state: "active" | "finished";
  strategy: string;
  query: string;
  rounds: number;
  created_at: string;
}

export interface QuestionOption {
  id: string;
  label: string;
  api_count: number;
}

export interface Question {
  text: string;
  aspect: string;
  options: QuestionOption[];
}

export interface TranscriptEntry {
  question: string;
  aspect: string;
  options: QuestionOption[];
  selected_option_id: string;
  selected_label: string;
}

export interface Keyword {
  text: string;
  source: string;
}

export interface ResultCard {
  fqn: string;
  description: string;
  keywords: Keyword[];
}

export interface ExtensionCard extends ResultCard {
  relation: string;
}

export interface Recommendation {
  query: string;
  rounds: number;
  results: ResultCard[];
  extensions: ExtensionCard[];
}

export interface SessionEnvelope {
  session: SessionInfo;
  transcript: TranscriptEntry[];
  question?: Question;
  recommendation?: Recommendation;
}

export class ApiError extends Error {
  code: string;
  status: number;

  constructor(code: string, message: string, status: number) {
    super(message);
    this.code = code;
    this.status = status;
  }
}

async function unwrap(response: Response): Promise<any> {
  let body: any = null;
  try {
    body = await response.json();
  } catch {
    // fall through; non-JSON bodies become a generic ApiError below
  }
  if (!response.ok) {
    const code = body && body.code ? body.code : "http_error";
    const message = body && body.message ? body.message : response.statusText;
    throw new ApiError(code, message, response.status);
  }
  return body;
}

export class ApiClient {
  baseUrl: string;

  constructor(baseUrl = "") {
    // "" means same-origin; anything else is used verbatim
    this.baseUrl = baseUrl.replace(/\/+$/, "");
  }

  async health(): Promise<{ status: string; apis: number }> {
    return unwrap(await fetch(this.baseUrl + "/health"));
  }

  async createSession(query: string, strategy = "id3"): Promise<SessionEnvelope> {
    const response = await fetch(this.baseUrl + "/sessions", {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ query, strategy }),
    });
    return unwrap(response);
  }

  async getSession(id: string): Promise<SessionEnvelope> {
    return unwrap(await fetch(this.baseUrl + "/sessions/" + encodeURIComponent(id)));
  }

  async answer(id: string, optionId: string): Promise<SessionEnvelope> {
    const response = await fetch(
      this.baseUrl + "/sessions/" + encodeURIComponent(id) + "/answer",
      {
        method: "POST",
        headers: { "content-type": "application/json" },
        body: JSON.stringify({ option_id: optionId }),
      },
    );
    return unwrap(response);
  }

  async stop(id: string): Promise<SessionEnvelope> {
    const response = await fetch(
      this.baseUrl + "/sessions/" + encodeURIComponent(id) + "/stop",
      { method: "POST" },
    );
    return unwrap(response);
  }
}
