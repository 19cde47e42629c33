/** The one server call the editor makes: POST /api/validate. */

import type { ValidateOptions, ValidationReport } from "./types.js";

export type Validator = (
  source: string,
  options?: ValidateOptions,
) => Promise<ValidationReport>;

export function serviceValidator(baseUrl = ""): Validator {
  return async (source, options) => {
    const response = await fetch(`${baseUrl}/api/validate`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(options ? { source, options } : { source }),
    });
    if (!response.ok) {
      throw new Error(`validation service answered ${response.status}`);
    }
    return (await response.json()) as ValidationReport;
  };
}
