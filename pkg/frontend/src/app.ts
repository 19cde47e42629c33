/**
 * DOM wiring for the editor page: load file, edit, validate on demand,
 * diagnostics list with jump-to, inline markers, save-as download.
 *
 * The validator and downloader are injected so tests can drive the whole
 * loop without a network or a real file system.
 */

import type { Validator } from "./api.js";
import type { Downloader } from "./download.js";
import { offsetOf, positionAt } from "./positions.js";
import {
  EditorState,
  MAX_FILE_BYTES,
  bufferEdited,
  diagnosticSelected,
  fileLoaded,
  fileRejected,
  initialState,
  saved,
  validateFailed,
  validateSucceeded,
} from "./state.js";
import type { Diagnostic } from "./types.js";

export interface EditorDeps {
  validate: Validator;
  download: Downloader;
}

export interface EditorHandle {
  state(): EditorState;
  /** Pending async work (file read or validate request), for tests. */
  settled(): Promise<void>;
  root: HTMLElement;
}

const PAGE = `
  <div class="toolbar">
    <label class="load-label">Load file
      <input type="file" class="file-input" accept=".xml,application/xml,text/xml" hidden>
    </label>
    <button type="button" class="validate-button">Validate</button>
    <button type="button" class="save-button">Save as</button>
    <label class="require-declaration-label">
      <input type="checkbox" class="require-declaration"> Require declaration
    </label>
    <span class="file-name"></span>
  </div>
  <div class="banner" hidden></div>
  <div class="workspace">
    <div class="editor-pane">
      <pre class="highlights" aria-hidden="true"></pre>
      <textarea class="buffer" spellcheck="false" aria-label="XML source"></textarea>
    </div>
    <div class="problems-pane">
      <h2 class="problems-title">Problems</h2>
      <ol class="diagnostics"></ol>
    </div>
  </div>
  <div class="status-line"></div>
`;

function readFileText(file: File): Promise<string> {
  if (typeof file.text === "function") {
    return file.text();
  }
  // FileReader fallback for environments without Blob.text (e.g. jsdom)
  return new Promise((resolve, reject) => {
    const reader = new FileReader();
    reader.onload = () => resolve(String(reader.result ?? ""));
    reader.onerror = () => reject(reader.error ?? new Error("read failed"));
    reader.readAsText(file, "utf-8");
  });
}

function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

function markerRanges(buffer: string, diagnostics: Diagnostic[]): Array<[number, number]> {
  const textEnd = buffer.length;
  const ranges: Array<[number, number]> = [];
  for (const diagnostic of diagnostics) {
    let start = offsetOf(buffer, diagnostic.line, diagnostic.column);
    let end =
      diagnostic.endLine !== null && diagnostic.endColumn !== null
        ? offsetOf(buffer, diagnostic.endLine, diagnostic.endColumn)
        : start + 1;
    if (start >= textEnd) {
      start = Math.max(textEnd - 1, 0); // end-of-input problems mark the last character
    }
    end = Math.min(Math.max(end, start + 1), textEnd);
    if (end > start) {
      ranges.push([start, end]);
    }
  }
  ranges.sort((a, b) => a[0] - b[0]);
  // Overlapping diagnostics share one visual marker.
  const merged: Array<[number, number]> = [];
  for (const [start, end] of ranges) {
    const last = merged[merged.length - 1];
    if (last && start <= last[1]) {
      last[1] = Math.max(last[1], end);
    } else {
      merged.push([start, end]);
    }
  }
  return merged;
}

function renderHighlights(buffer: string, diagnostics: Diagnostic[]): string {
  if (diagnostics.length === 0 || buffer.length === 0) {
    return escapeHtml(buffer);
  }
  const pieces: string[] = [];
  let cursor = 0;
  for (const [start, end] of markerRanges(buffer, diagnostics)) {
    pieces.push(escapeHtml(buffer.slice(cursor, start)));
    pieces.push(`<mark class="error-marker">${escapeHtml(buffer.slice(start, end))}</mark>`);
    cursor = end;
  }
  pieces.push(escapeHtml(buffer.slice(cursor)));
  return pieces.join("");
}

export function createEditor(root: HTMLElement, deps: EditorDeps): EditorHandle {
  root.innerHTML = PAGE;
  const fileInput = root.querySelector<HTMLInputElement>(".file-input")!;
  const validateButton = root.querySelector<HTMLButtonElement>(".validate-button")!;
  const saveButton = root.querySelector<HTMLButtonElement>(".save-button")!;
  const requireDeclaration = root.querySelector<HTMLInputElement>(".require-declaration")!;
  const fileName = root.querySelector<HTMLElement>(".file-name")!;
  const banner = root.querySelector<HTMLElement>(".banner")!;
  const highlights = root.querySelector<HTMLPreElement>(".highlights")!;
  const textarea = root.querySelector<HTMLTextAreaElement>(".buffer")!;
  const list = root.querySelector<HTMLOListElement>(".diagnostics")!;
  const statusLine = root.querySelector<HTMLElement>(".status-line")!;

  let state = initialState();
  let pending: Promise<void> = Promise.resolve();
  let requestSequence = 0;

  function renderStatus(): void {
    const at = positionAt(state.buffer, textarea.selectionStart ?? 0);
    statusLine.textContent = `Ln ${at.line}, Col ${at.column}`;
  }

  function render(): void {
    if (textarea.value !== state.buffer) {
      textarea.value = state.buffer;
    }
    fileName.textContent = state.fileName
      ? `${state.fileName}${state.dirty ? " •" : ""}`
      : state.dirty
        ? "(unsaved) •"
        : "";
    if (state.banner) {
      banner.hidden = false;
      banner.textContent = state.banner.text;
      banner.className = `banner banner-${state.banner.kind}`;
    } else {
      banner.hidden = true;
      banner.textContent = "";
      banner.className = "banner";
    }
    const diagnostics = state.lastReport?.diagnostics ?? [];
    highlights.innerHTML = renderHighlights(state.buffer, diagnostics);
    list.innerHTML = "";
    diagnostics.forEach((diagnostic, index) => {
      const item = document.createElement("li");
      const row = document.createElement("button");
      row.type = "button";
      row.className = "diagnostic-row";
      if (index === state.selectedDiagnostic) {
        row.classList.add("selected");
      }
      row.dataset.index = String(index);
      row.dataset.code = diagnostic.code;
      row.textContent = `${diagnostic.line}:${diagnostic.column} ${diagnostic.code} ${diagnostic.message}`;
      row.addEventListener("click", () => jumpTo(index));
      item.appendChild(row);
      list.appendChild(item);
    });
    renderStatus();
  }

  function update(next: EditorState): void {
    state = next;
    render();
  }

  function jumpTo(index: number): void {
    const report = state.lastReport;
    if (!report || !report.diagnostics[index]) {
      return;
    }
    update(diagnosticSelected(state, index));
    const diagnostic = report.diagnostics[index];
    const offset = offsetOf(state.buffer, diagnostic.line, diagnostic.column);
    textarea.focus();
    textarea.setSelectionRange(offset, offset);
    if (typeof textarea.scrollIntoView === "function") {
      textarea.scrollIntoView();
    }
    renderStatus();
  }

  fileInput.addEventListener("change", () => {
    const file = fileInput.files?.[0];
    fileInput.value = "";
    if (!file) {
      return; // picker cancelled: state unchanged
    }
    if (file.size > MAX_FILE_BYTES) {
      update(fileRejected(state, `file too large (limit ${MAX_FILE_BYTES} bytes)`));
      return;
    }
    pending = readFileText(file)
      .then((text) => update(fileLoaded(state, file.name, text)))
      .catch(() => update(fileRejected(state, `could not read ${file.name}`)));
  });

  textarea.addEventListener("input", () => {
    update(bufferEdited(state, textarea.value));
  });
  textarea.addEventListener("keyup", renderStatus);
  textarea.addEventListener("click", renderStatus);
  textarea.addEventListener("scroll", () => {
    highlights.scrollTop = textarea.scrollTop;
    highlights.scrollLeft = textarea.scrollLeft;
  });

  validateButton.addEventListener("click", () => {
    const sequence = ++requestSequence;
    const source = state.buffer;
    pending = deps
      .validate(source, { requireDeclaration: requireDeclaration.checked })
      .then((report) => {
        if (sequence === requestSequence) {
          update(validateSucceeded(state, report));
        }
      })
      .catch((error: unknown) => {
        if (sequence === requestSequence) {
          const reason = error instanceof Error ? error.message : String(error);
          update(validateFailed(state, `validation failed: ${reason}`));
        }
      });
  });

  saveButton.addEventListener("click", () => {
    deps.download(state.buffer, state.fileName ?? "document.xml");
    update(saved(state));
  });

  render();
  return {
    state: () => state,
    settled: () => pending,
    root,
  };
}
