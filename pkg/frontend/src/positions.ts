/**
 * Conversions between the service's 1-based (line, column) positions and
 * string offsets usable for textarea selections.
 *
 * Columns count Unicode scalar values (code points); returned offsets are
 * UTF-16 code units, which is what DOM selection APIs expect. LF, CRLF, and
 * a lone CR each end a line.
 */

/** Offset of (line, column); clamps to the end of the line / document. */
export function offsetOf(text: string, line: number, column: number): number {
  let currentLine = 1;
  let currentColumn = 1;
  let offset = 0;
  while (offset < text.length) {
    if (currentLine === line && currentColumn === column) {
      return offset;
    }
    const ch = text.codePointAt(offset)!;
    const width = ch > 0xffff ? 2 : 1;
    if (ch === 0x0a || ch === 0x0d) {
      if (currentLine === line) {
        // target column is past the end of this line
        return offset;
      }
      currentLine += 1;
      currentColumn = 1;
      offset += 1;
      if (ch === 0x0d && text.charCodeAt(offset) === 0x0a) {
        offset += 1;
      }
    } else {
      currentColumn += 1;
      offset += width;
    }
  }
  return text.length;
}

/** (line, column) of a code-unit offset, for displaying cursor positions. */
export function positionAt(text: string, offset: number): { line: number; column: number } {
  let line = 1;
  let column = 1;
  let index = 0;
  while (index < offset && index < text.length) {
    const ch = text.codePointAt(index)!;
    if (ch === 0x0a || ch === 0x0d) {
      line += 1;
      column = 1;
      index += 1;
      if (ch === 0x0d && text.charCodeAt(index) === 0x0a && index < offset) {
        index += 1;
      }
    } else {
      column += 1;
      index += ch > 0xffff ? 2 : 1;
    }
  }
  return { line, column };
}
