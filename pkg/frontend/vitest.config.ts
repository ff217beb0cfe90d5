import { defineConfig } from "vitest/config";

export default defineConfig({
  test: {
    include: ["tests/**/*.test.ts"],
    // every endpoint call pays a fresh interpreter + JIT warm-up
    testTimeout: 120_000,
    hookTimeout: 300_000,
    fileParallelism: false,
  },
});
