import { ApiClient } from "./api";
import { App } from "./app";

addEventListener("load", () => {
  const root = document.getElementById("app");
  if (!root) {
    throw new Error("missing #app element");
  }
  void new App(root, new ApiClient()).start();
});
