import { readFileSync } from "node:fs";
import { resolve } from "node:path";
import { afterEach, beforeEach, describe, expect, it, vi } from "vitest";

import { ApiClient } from "../src/api";
import { DialogueApp } from "../src/app";
import { FLOW } from "./fixtures";

const PAGE = readFileSync(resolve(process.cwd(), "index.html"), "utf-8");
const SESSION_ID = FLOW.create.session.id;

function jsonResponse(body: unknown, status = 200): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { "content-type": "application/json" },
  });
}

// Route table driving the recorded walkthrough; tests override entries.
type Route = (init?: RequestInit) => Response | Promise<Response>;

function installServer(routes: Record<string, Route>) {
  const fetchMock = vi.fn(async (url: string, init?: RequestInit) => {
    const method = init?.method ?? "GET";
    const route = routes[`${method} ${url}`];
    if (!route) throw new TypeError(`no route for ${method} ${url}`);
    return route(init);
  });
  vi.stubGlobal("fetch", fetchMock);
  return fetchMock;
}

function walkthroughRoutes(): Record<string, Route> {
  return {
    "POST http://srv/sessions": () => jsonResponse(FLOW.create),
    [`POST http://srv/sessions/${SESSION_ID}/answer`]: (init) => {
      const chosen = JSON.parse(init?.body as string).option_id;
      if (chosen === "1") return jsonResponse(FLOW.answer1);
      if (chosen === "0") return jsonResponse(FLOW.answer2);
      throw new Error(`unexpected option ${chosen}`);
    },
    [`GET http://srv/sessions/${SESSION_ID}`]: () => jsonResponse(FLOW.answer2),
  };
}

function buildApp(): DialogueApp {
  const bodyHtml = PAGE.slice(PAGE.indexOf("<body>") + 6, PAGE.indexOf("</body>"))
    .replace(/<script[^>]*><\/script>/, "");
  document.body.innerHTML = bodyHtml;
  return new DialogueApp(document, new ApiClient("http://srv"));
}

function optionButton(label: string): HTMLButtonElement {
  const buttons = Array.from(document.querySelectorAll<HTMLButtonElement>("#options button"));
  const hit = buttons.find((b) => (b.textContent ?? "").startsWith(label));
  if (!hit) throw new Error(`no option button labelled ${label}`);
  return hit;
}

beforeEach(() => {
  document.body.innerHTML = "";
});

afterEach(() => {
  vi.unstubAllGlobals();
});

describe("dialogue walkthrough", () => {
  it("asks, narrows, and renders the explained recommendation", async () => {
    installServer(walkthroughRoutes());
    const app = buildApp();

    (document.getElementById("query") as HTMLInputElement).value =
      "get the current working directory";
    await app.startDialogue();

    expect(document.getElementById("question-text")!.textContent).toBe(
      "What do you want to do?",
    );
    expect(document.querySelectorAll("#options button").length).toBeGreaterThanOrEqual(3);

    await app.chooseOption("1"); // "return path"
    expect(document.getElementById("question-text")!.textContent).toBe(
      "What kind of the path string do you want?",
    );
    const entries = document.querySelectorAll("#transcript li");
    expect(entries.length).toBe(1);
    expect(entries[0]!.textContent).toContain("return path");

    await app.chooseOption("0"); // "absolute"
    const results = document.getElementById("results")!;
    expect(results.hidden).toBe(false);
    expect(document.querySelectorAll("#transcript li").length).toBe(2);

    const cards = results.querySelectorAll(".card");
    expect(cards.length).toBe(5); // 1 result + 4 extended
    expect(cards[0]!.querySelector(".fqn")!.textContent).toBe(
      "java.io.File.getAbsolutePath()",
    );

    // the keyword highlights on the result card, exactly
    const marks = Array.from(cards[0]!.querySelectorAll("mark")).map((m) =>
      (m.textContent ?? "").toLowerCase(),
    );
    expect(new Set(marks)).toEqual(new Set(["returns", "absolute", "path string"]));
  });

  it("groups extended cards under relation badges", async () => {
    installServer(walkthroughRoutes());
    const app = buildApp();
    (document.getElementById("query") as HTMLInputElement).value = "get cwd";
    await app.startDialogue();
    await app.chooseOption("1");
    await app.chooseOption("0");

    const badges = Array.from(document.querySelectorAll(".relation-group .badge")).map(
      (b) => b.textContent,
    );
    expect(badges).toEqual(["Function Similarity", "Function Collaboration"]);
    const groups = document.querySelectorAll(".relation-group");
    expect(groups[0]!.querySelectorAll(".card").length).toBe(2);
    expect(groups[1]!.querySelectorAll(".card").length).toBe(2);
  });

  it("copies an fqn to the clipboard", async () => {
    installServer(walkthroughRoutes());
    const writeText = vi.fn();
    Object.defineProperty(navigator, "clipboard", {
      value: { writeText },
      configurable: true,
    });
    const app = buildApp();
    (document.getElementById("query") as HTMLInputElement).value = "get cwd";
    await app.startDialogue();
    await app.chooseOption("1");
    await app.chooseOption("0");

    (document.querySelector(".card .copy") as HTMLButtonElement).click();
    expect(writeText).toHaveBeenCalledWith("java.io.File.getAbsolutePath()");
  });

  it("stops mid-dialogue and shows the current ranking", async () => {
    const routes = walkthroughRoutes();
    routes[`POST http://srv/sessions/${SESSION_ID}/stop`] = () =>
      jsonResponse({ ...FLOW.stopped, session: FLOW.create.session });
    installServer(routes);
    const app = buildApp();
    (document.getElementById("query") as HTMLInputElement).value = "get cwd";
    await app.startDialogue();

    (document.getElementById("stop-btn") as HTMLButtonElement).click();
    await vi.waitFor(() => {
      expect(document.getElementById("results")!.hidden).toBe(false);
    });
    expect(document.querySelectorAll("#results .card").length).toBeGreaterThanOrEqual(5);
  });

  it("re-fetches the session on refresh", async () => {
    installServer(walkthroughRoutes());
    const app = buildApp();
    (document.getElementById("query") as HTMLInputElement).value = "get cwd";
    await app.startDialogue();
    await app.chooseOption("1");
    await app.chooseOption("0");

    document.getElementById("results")!.textContent = ""; // simulate a stale pane
    await app.refresh();
    expect(document.querySelectorAll("#results .card").length).toBe(5);
  });
});

describe("input validation and empty states", () => {
  it("rejects a blank query inline without a request", async () => {
    const fetchMock = installServer({});
    const app = buildApp();
    (document.getElementById("query") as HTMLInputElement).value = "   ";
    await app.startDialogue();

    expect(document.getElementById("query-error")!.hidden).toBe(false);
    expect(fetchMock).not.toHaveBeenCalled();
  });

  it("renders a friendly empty state when nothing matches", async () => {
    installServer({
      "POST http://srv/sessions": () =>
        jsonResponse(FLOW.nocand.body, FLOW.nocand.status),
    });
    const app = buildApp();
    (document.getElementById("query") as HTMLInputElement).value =
      "weld the flux capacitor";
    await app.startDialogue();

    const results = document.getElementById("results")!;
    expect(results.hidden).toBe(false);
    expect(results.textContent).toContain("No APIs found");
    expect(document.getElementById("banner")!.hidden).toBe(true);
  });
});

describe("pending guard and retries", () => {
  it("sends a single request on a double-click", async () => {
    let release: (r: Response) => void = () => {};
    const routes = walkthroughRoutes();
    routes[`POST http://srv/sessions/${SESSION_ID}/answer`] = () =>
      new Promise<Response>((resolve) => {
        release = resolve;
      });
    const fetchMock = installServer(routes);
    const app = buildApp();
    (document.getElementById("query") as HTMLInputElement).value = "get cwd";
    await app.startDialogue();

    const button = optionButton("return path");
    button.click();
    button.click(); // second click races the first
    release(jsonResponse(FLOW.answer1));
    await vi.waitFor(() => {
      expect(document.querySelectorAll("#transcript li").length).toBe(1);
    });

    const answerCalls = fetchMock.mock.calls.filter(([url]) =>
      (url as string).endsWith("/answer"),
    );
    expect(answerCalls.length).toBe(1);
  });

  it("keeps the transcript and offers retry when an answer fails", async () => {
    const routes = walkthroughRoutes();
    let failures = 1;
    const good = routes[`POST http://srv/sessions/${SESSION_ID}/answer`]!;
    routes[`POST http://srv/sessions/${SESSION_ID}/answer`] = (init) => {
      if (failures-- > 0) return new Response("boom", { status: 500 });
      return good(init);
    };
    installServer(routes);
    const app = buildApp();
    (document.getElementById("query") as HTMLInputElement).value = "get cwd";
    await app.startDialogue();

    await app.chooseOption("1");
    expect(document.getElementById("banner")!.hidden).toBe(false);
    // nothing lost: the question is still on screen with live options
    expect(document.getElementById("question-text")!.textContent).toBe(
      "What do you want to do?",
    );
    expect(document.querySelectorAll("#transcript li").length).toBe(0);

    (document.getElementById("retry") as HTMLButtonElement).click();
    await vi.waitFor(() => {
      expect(document.querySelectorAll("#transcript li").length).toBe(1);
    });
    expect(document.getElementById("banner")!.hidden).toBe(true);
  });

  it("recovers from session_finished by re-fetching the session", async () => {
    const routes = walkthroughRoutes();
    routes[`POST http://srv/sessions/${SESSION_ID}/answer`] = () =>
      jsonResponse({ code: "session_finished", message: "already done" }, 409);
    const fetchMock = installServer(routes);
    const app = buildApp();
    (document.getElementById("query") as HTMLInputElement).value = "get cwd";
    await app.startDialogue();

    await app.chooseOption("1");
    expect(document.getElementById("banner")!.hidden).toBe(false);

    (document.getElementById("retry") as HTMLButtonElement).click();
    await vi.waitFor(() => {
      expect(document.getElementById("results")!.hidden).toBe(false);
    });
    const refreshed = fetchMock.mock.calls.some(
      ([url, init]) =>
        url === `http://srv/sessions/${SESSION_ID}` &&
        (init as RequestInit | undefined)?.method === undefined,
    );
    expect(refreshed).toBe(true);
  });
});
