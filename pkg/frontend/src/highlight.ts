import type { Keyword } from "./api";

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

function escapeRegExp(text: string): string {
  return text.replace(/[.*+?^${}()|[\]\\]/g, "\\$&");
}

/**
 * Wrap every keyword occurrence in the description with <mark>.
 *
 * Matching is case-insensitive on exact tokens: "path string" marks the
 * phrase but leaves a bare "path" alone. Longer keywords win when one
 * contains another. The server supplies the keyword list; nothing is
 * inferred here.
 */
export function highlightKeywords(description: string, keywords: Keyword[]): string {
  const phrases = keywords
    .map((k) => k.text.trim())
    .filter((t) => t.length > 0)
    .sort((a, b) => b.length - a.length);
  if (phrases.length === 0) return escapeHtml(description);

  const pattern = new RegExp(
    "\\b(" + phrases.map(escapeRegExp).join("|") + ")\\b",
    "gi",
  );
  let html = "";
  let last = 0;
  for (const match of description.matchAll(pattern)) {
    const start = match.index ?? 0;
    html += escapeHtml(description.slice(last, start));
    html += "<mark>" + escapeHtml(match[0]) + "</mark>";
    last = start + match[0].length;
  }
  html += escapeHtml(description.slice(last));
  return html;
}
