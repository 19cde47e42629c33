import { describe, expect, it } from "vitest";

import {
  bufferEdited,
  diagnosticSelected,
  fileLoaded,
  fileRejected,
  initialState,
  saved,
  validateFailed,
  validateSucceeded,
} from "../src/state.js";
import type { ValidationReport } from "../src/types.js";

const REPORT: ValidationReport = {
  uri: null,
  wellFormed: false,
  errorCount: 1,
  warningCount: 0,
  diagnostics: [
    {
      code: "MISMATCHED_END_TAG",
      severity: "error",
      message: "end tag '</crew>' does not match open element 'CREW'",
      line: 1,
      column: 20,
      endLine: 1,
      endColumn: 27,
      relatedLine: 1,
      relatedColumn: 1,
    },
  ],
};

describe("editor state", () => {
  it("loading replaces the buffer and clears dirty and report", () => {
    let state = validateSucceeded(initialState(), REPORT);
    state = fileLoaded(state, "a.xml", "<a/>");
    expect(state.buffer).toBe("<a/>");
    expect(state.fileName).toBe("a.xml");
    expect(state.dirty).toBe(false);
    expect(state.lastReport).toBeNull();
  });

  it("a rejected load leaves the document untouched", () => {
    const before = fileLoaded(initialState(), "a.xml", "<a/>");
    const after = fileRejected(before, "file too large");
    expect(after.buffer).toBe(before.buffer);
    expect(after.fileName).toBe(before.fileName);
    expect(after.banner?.kind).toBe("error");
  });

  it("dirty tracks difference from the loaded/saved baseline", () => {
    let state = fileLoaded(initialState(), "a.xml", "<a/>");
    state = bufferEdited(state, "<a></a>");
    expect(state.dirty).toBe(true);
    state = bufferEdited(state, "<a/>");
    expect(state.dirty).toBe(false);
    state = bufferEdited(state, "<b/>");
    state = saved(state);
    expect(state.dirty).toBe(false);
    state = bufferEdited(state, "<b/> ");
    expect(state.dirty).toBe(true);
  });

  it("any edit clears the report so markers never go stale", () => {
    let state = fileLoaded(initialState(), "a.xml", "<CREW></crew>");
    state = validateSucceeded(state, REPORT);
    state = diagnosticSelected(state, 0);
    state = bufferEdited(state, "<CREW></CREW>");
    expect(state.lastReport).toBeNull();
    expect(state.selectedDiagnostic).toBeNull();
  });

  it("selection is bounded by the diagnostic list", () => {
    let state = validateSucceeded(initialState(), REPORT);
    expect(diagnosticSelected(state, 5).selectedDiagnostic).toBeNull();
    expect(diagnosticSelected(state, -1).selectedDiagnostic).toBeNull();
    expect(diagnosticSelected(state, 0).selectedDiagnostic).toBe(0);
  });

  it("a failed validation keeps the previous report", () => {
    let state = validateSucceeded(initialState(), REPORT);
    state = validateFailed(state, "service down");
    expect(state.lastReport).toEqual(REPORT);
    expect(state.banner?.kind).toBe("error");
  });

  it("well-formed reports raise the success banner", () => {
    const clean: ValidationReport = {
      uri: null,
      wellFormed: true,
      errorCount: 0,
      warningCount: 0,
      diagnostics: [],
    };
    const state = validateSucceeded(initialState(), clean);
    expect(state.banner?.kind).toBe("success");
    expect(state.banner?.text).toMatch(/well-formed/i);
  });
});
