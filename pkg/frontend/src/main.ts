/** Page bootstrap: wire the editor to the real service and browser APIs. */

import { createEditor } from "./app.js";
import { serviceValidator } from "./api.js";
import { downloadText } from "./download.js";

const root = document.getElementById("app");
if (root) {
  createEditor(root, { validate: serviceValidator(), download: downloadText });
}
