import { ExplorerApp } from "./app.js";

const container = document.getElementById("app");
if (!container) throw new Error("missing #app container");

// Same-origin by default (the API can serve the UI at /ui); override with
// ?api=http://host:port or a <meta name="api-base"> tag.
const params = new URLSearchParams(window.location.search);
const meta = document.querySelector('meta[name="api-base"]') as HTMLMetaElement | null;
const apiBase = params.get("api") ?? meta?.content ?? "";

const app = new ExplorerApp(container, apiBase);
void app.start();

declare global {
  interface Window {
    explorer: ExplorerApp;
  }
}
window.explorer = app;
