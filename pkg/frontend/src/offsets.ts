/**
 * Offset conversion between JS UTF-16 string indices and Unicode scalar
 * values, plus DOM-selection-to-anchor mapping.
 *
 * The server counts offsets in Unicode scalar values over the canonical
 * body_text it serves; JS strings are UTF-16, so astral characters occupy
 * two units here but one scalar there. Every anchor the UI submits must be
 * converted, never trusted from DOM offsets directly.
 */

export interface SpanAnchor {
  article_id: string;
  start: number;
  end: number;
  surface: string;
}

/** Scalar-value count of text[0..utf16Index). A mid-surrogate index counts
 * the whole character it splits. */
export function utf16ToScalar(text: string, utf16Index: number): number {
  let scalars = 0;
  let i = 0;
  while (i < utf16Index && i < text.length) {
    const cp = text.codePointAt(i);
    if (cp === undefined) break;
    i += cp > 0xffff ? 2 : 1;
    scalars += 1;
  }
  return scalars;
}

/** UTF-16 index of the scalarIndex-th scalar value. */
export function scalarToUtf16(text: string, scalarIndex: number): number {
  let scalars = 0;
  let i = 0;
  while (scalars < scalarIndex && i < text.length) {
    const cp = text.codePointAt(i);
    if (cp === undefined) break;
    i += cp > 0xffff ? 2 : 1;
    scalars += 1;
  }
  return i;
}

/** Substring addressed in scalar values (mirrors the server's slicing). */
export function scalarSlice(text: string, start: number, end: number): string {
  return text.slice(scalarToUtf16(text, start), scalarToUtf16(text, end));
}

export function scalarLength(text: string): number {
  let n = 0;
  for (const _ of text) n += 1;
  return n;
}

export type SelectionResult =
  | { ok: true; anchor: SpanAnchor }
  | { ok: false; reason: string };

/**
 * Map a DOM selection inside the article container to a span anchor over the
 * API-delivered body text. The article text must be rendered verbatim as the
 * single text node of `container`; any selection touching other nodes is
 * rejected rather than guessed at.
 */
export function selectionToAnchor(
  articleId: string,
  bodyText: string,
  container: HTMLElement,
  selection: Selection | null,
): SelectionResult {
  if (!selection || selection.rangeCount === 0 || selection.isCollapsed) {
    return { ok: false, reason: "nothing selected" };
  }
  const range = selection.getRangeAt(0);
  const textNode = container.firstChild;
  if (!textNode || textNode.nodeType !== Node.TEXT_NODE || container.childNodes.length !== 1) {
    return { ok: false, reason: "article text is not rendered as one text node" };
  }
  if (range.startContainer !== textNode || range.endContainer !== textNode) {
    return { ok: false, reason: "selection crosses non-article elements" };
  }
  const rendered = textNode.textContent ?? "";
  if (rendered !== bodyText) {
    return { ok: false, reason: "rendered text does not match the article body" };
  }
  const startUtf16 = Math.min(range.startOffset, range.endOffset);
  const endUtf16 = Math.max(range.startOffset, range.endOffset);
  const start = utf16ToScalar(bodyText, startUtf16);
  const end = utf16ToScalar(bodyText, endUtf16);
  if (start >= end) {
    return { ok: false, reason: "empty selection" };
  }
  const surface = scalarSlice(bodyText, start, end);
  if (surface.trim() === "") {
    return { ok: false, reason: "selection is only whitespace" };
  }
  return { ok: true, anchor: { article_id: articleId, start, end, surface } };
}
