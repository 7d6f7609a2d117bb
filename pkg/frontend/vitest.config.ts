import { defineConfig } from "vitest/config";

export default defineConfig({
  test: {
    include: ["tests/**/*.test.ts"],
    // parity tests drive a real backend process through many mutation walks
    testTimeout: 120_000,
    hookTimeout: 60_000,
  },
});
