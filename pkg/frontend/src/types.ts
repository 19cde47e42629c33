/** Client-side mirrors of the validation service's JSON report schema. */

export type Severity = "error" | "warning";

export interface Diagnostic {
  code: string;
  severity: Severity;
  message: string;
  line: number;
  column: number;
  endLine: number | null;
  endColumn: number | null;
  relatedLine: number | null;
  relatedColumn: number | null;
}

export interface ValidationReport {
  uri: string | null;
  wellFormed: boolean;
  errorCount: number;
  warningCount: number;
  diagnostics: Diagnostic[];
}

export interface ValidateOptions {
  requireDeclaration?: boolean;
  maxErrors?: number;
}
