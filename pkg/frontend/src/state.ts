/**
 * Pure editor state and transitions: load a file, edit, validate on demand,
 * jump to a diagnostic, save. The DOM layer renders whatever this produces.
 *
 * Invariants kept here:
 *  - dirty is true exactly when the buffer differs from the last
 *    loaded/saved content;
 *  - selectedDiagnostic always indexes into lastReport.diagnostics;
 *  - any edit clears the report (stale markers never point at moved text).
 */

import type { ValidationReport } from "./types.js";

export interface Banner {
  kind: "info" | "success" | "error";
  text: string;
}

export interface EditorState {
  buffer: string;
  fileName: string | null;
  /** Buffer content as of the last load or save; the dirty baseline. */
  cleanBuffer: string;
  dirty: boolean;
  lastReport: ValidationReport | null;
  selectedDiagnostic: number | null;
  banner: Banner | null;
}

export const MAX_FILE_BYTES = 10 * 1024 * 1024; // mirrors the service limit

export function initialState(): EditorState {
  return {
    buffer: "",
    fileName: null,
    cleanBuffer: "",
    dirty: false,
    lastReport: null,
    selectedDiagnostic: null,
    banner: null,
  };
}

export function fileLoaded(state: EditorState, name: string, text: string): EditorState {
  return {
    ...state,
    buffer: text,
    fileName: name,
    cleanBuffer: text,
    dirty: false,
    lastReport: null,
    selectedDiagnostic: null,
    banner: { kind: "info", text: `Loaded ${name}` },
  };
}

export function fileRejected(state: EditorState, reason: string): EditorState {
  // Load failure leaves the document alone; only the banner changes.
  return { ...state, banner: { kind: "error", text: reason } };
}

export function bufferEdited(state: EditorState, text: string): EditorState {
  if (text === state.buffer) {
    return state;
  }
  return {
    ...state,
    buffer: text,
    dirty: text !== state.cleanBuffer,
    lastReport: null,
    selectedDiagnostic: null,
    banner: null,
  };
}

export function validateSucceeded(state: EditorState, report: ValidationReport): EditorState {
  const banner: Banner = report.wellFormed
    ? { kind: "success", text: "Well-formed" }
    : {
        kind: "error",
        text: `NOT well-formed (${report.errorCount} errors, ${report.warningCount} warnings)`,
      };
  return { ...state, lastReport: report, selectedDiagnostic: null, banner };
}

export function validateFailed(state: EditorState, reason: string): EditorState {
  // Keep the previous report; only surface the failure.
  return { ...state, banner: { kind: "error", text: reason } };
}

export function diagnosticSelected(state: EditorState, index: number): EditorState {
  if (!state.lastReport || index < 0 || index >= state.lastReport.diagnostics.length) {
    return state;
  }
  return { ...state, selectedDiagnostic: index };
}

export function saved(state: EditorState): EditorState {
  return { ...state, cleanBuffer: state.buffer, dirty: false };
}
