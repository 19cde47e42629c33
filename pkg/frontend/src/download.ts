/** Save-as via a temporary object-URL anchor; the exact buffer bytes, UTF-8. */

export type Downloader = (text: string, fileName: string) => void;

export function downloadText(text: string, fileName: string): void {
  const blob = new Blob([text], { type: "application/xml;charset=utf-8" });
  const url = URL.createObjectURL(blob);
  const anchor = document.createElement("a");
  anchor.href = url;
  anchor.download = fileName;
  anchor.click();
  URL.revokeObjectURL(url);
}
