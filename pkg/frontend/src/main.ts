import { ApiClient } from "./api";
import { DialogueApp } from "./app";

// The base URL box lets the same page talk to any apidialog server;
// empty means same-origin.
document.addEventListener("DOMContentLoaded", () => {
  const baseInput = document.getElementById("base-url") as HTMLInputElement;
  let app = new DialogueApp(document, new ApiClient(baseInput.value));
  baseInput.addEventListener("change", () => {
    app.client = new ApiClient(baseInput.value);
  });
  (window as any).app = app; // console access for poking around
});
