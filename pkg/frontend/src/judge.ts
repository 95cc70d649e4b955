/**
 * Two-stage error labeling with a judge model.
 *
 * Stage one asks the judge to explain the differences between a gold
 * sentence and a model rewrite; ten generations are collapsed to the most
 * representative explanation by embedding similarity. Stage two turns that
 * explanation into short uppercase labels, again over ten generations, and
 * the labels seen in at least half of them are retained, mapped onto the
 * engine's 14-code taxonomy, and written in its label-file format.
 */

import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";

import { CharNgramEmbedder, Embedder, centralIndex } from "./embedding.js";

export interface JudgeClient {
  complete(system: string, user: string): Promise<string>;
}

export interface JudgeConfig {
  runs?: number; // generations per stage (default 10)
  retries?: number; // API retries per call
  backoffMs?: number;
  embedder?: Embedder;
  rewritePrompt?: string; // shown to the judge as context, when known
}

export interface PairLabels {
  id: string;
  codes: string[];
  explanation: string;
  skipped?: boolean;
}

const HERE = dirname(fileURLToPath(import.meta.url));

function loadData<T>(name: string): T {
  for (const root of [join(HERE, "..", "data"), join(HERE, "..", "..", "data")]) {
    try {
      return JSON.parse(readFileSync(join(root, name), "utf-8"));
    } catch {
      // next root
    }
  }
  throw new Error(`data file not found: ${name}`);
}

const LABEL_MAP: Record<string, string> = loadData("label_map.json");
const EXAMPLES = loadData<{
  explanation_examples: { golden: string; rewritten: string; explanations: string }[];
  label_examples: { golden: string; rewritten: string; explanations: string; labels: string }[];
}>("judge_examples.json");

export const EXPLANATION_SYSTEM =
  "You are an assistant whose task is to quickly summarize error types comparing a golden and an LLM-rewritten sentence.";

export const LABEL_SYSTEM =
  "You are an assistant whose task is to generate short error labels based on error descriptions.";

export function buildExplanationPrompt(
  golden: string,
  rewritten: string,
  rewritePrompt?: string,
): string {
  const examples = EXAMPLES.explanation_examples
    .map(
      (e) =>
        `Golden sentence: ${e.golden}\nLLM-rewritten sentence: ${e.rewritten}\nError type explanations: ${e.explanations}`,
    )
    .join("\n\n");
  const info = rewritePrompt
    ? `\n<info>\nFor your information, the LLM-rewritten sentence was generated after the LLM received this prompt: ${rewritePrompt}\n</info>\n`
    : "";
  return (
    "Given a rewritten golden sentence and an LLM-rewritten sentence, compare the two " +
    "and write a few words about the errors found in the LLM-rewritten sentence (if any) " +
    "compared to the golden sentence. Each error type explanation should be separated " +
    "with a semicolon and written in lowercase. Each explanation should start with a past " +
    "tense verb. Only output the explanations and keep it short.\n\n" +
    `<examples>\n${examples}\n</examples>\n${info}\n` +
    `Golden sentence: ${golden}\nLLM-rewritten sentence: ${rewritten}\nError type explanations:`
  );
}

export function buildLabelPrompt(
  golden: string,
  rewritten: string,
  explanation: string,
  previousLabels: string[],
  rewritePrompt?: string,
): string {
  const examples = EXAMPLES.label_examples
    .map(
      (e) =>
        `Golden sentence: ${e.golden}\nLLM-rewritten sentence: ${e.rewritten}\n` +
        `Error type explanations: ${e.explanations}\nError labels: ${e.labels}`,
    )
    .join("\n\n");
  const info = rewritePrompt
    ? `\n<info>\nFor your information, the LLM-rewritten sentence was generated after the LLM received this prompt: ${rewritePrompt}\n</info>\n`
    : "";
  const previous = previousLabels.length > 0 ? previousLabels.join(";") : "none yet";
  return (
    "Given a rewritten golden sentence, an LLM-rewritten sentence and an error type " +
    "explanation, generate error labels for the LLM-rewritten sentence. Each error label " +
    "should be separated with a semicolon (without spaces) and written in uppercase. " +
    "If no error is found, output nothing. Only output the labels.\n\n" +
    `For reference, the previous labels have already been generated: ${previous}\n` +
    "If any of the labels corresponds to the error type explanation, use it. Otherwise, " +
    "feel free to generate a new label.\n\n" +
    `<examples>\n${examples}\n</examples>\n${info}\n` +
    `Golden sentence: ${golden}\nLLM-rewritten sentence: ${rewritten}\n` +
    `Error type explanations: ${explanation}\nError labels:`
  );
}

async function completeWithRetry(
  client: JudgeClient,
  system: string,
  user: string,
  retries: number,
  backoffMs: number,
): Promise<string> {
  let lastError: unknown;
  for (let attempt = 0; attempt <= retries; attempt++) {
    try {
      return await client.complete(system, user);
    } catch (err) {
      lastError = err;
      if (attempt < retries) {
        await new Promise((resolve) => setTimeout(resolve, backoffMs * 2 ** attempt));
      }
    }
  }
  throw lastError;
}

export function mapRawLabels(raw: string): string[] {
  const codes = new Set<string>();
  for (const piece of raw.split(/[;,]/)) {
    const label = piece.trim().toUpperCase().replace(/\s+/g, "_");
    if (!label) continue;
    const mapped = LABEL_MAP[label];
    if (mapped) codes.add(mapped);
  }
  return [...codes].sort();
}

export async function judgePair(
  id: string,
  golden: string,
  rewritten: string,
  client: JudgeClient,
  config: JudgeConfig = {},
): Promise<PairLabels> {
  if (golden === rewritten) {
    return { id, codes: [], explanation: "" };
  }
  const runs = config.runs ?? 10;
  const retries = config.retries ?? 2;
  const backoffMs = config.backoffMs ?? 250;
  const embedder = config.embedder ?? new CharNgramEmbedder();

  try {
    const explanationPrompt = buildExplanationPrompt(golden, rewritten, config.rewritePrompt);
    const explanations: string[] = [];
    for (let i = 0; i < runs; i++) {
      explanations.push(
        (await completeWithRetry(client, EXPLANATION_SYSTEM, explanationPrompt, retries, backoffMs)).trim(),
      );
    }
    const explanation = explanations[centralIndex(explanations, embedder)];

    const seen: string[] = [];
    const counts = new Map<string, number>();
    for (let i = 0; i < runs; i++) {
      const prompt = buildLabelPrompt(golden, rewritten, explanation, seen, config.rewritePrompt);
      const raw = (await completeWithRetry(client, LABEL_SYSTEM, prompt, retries, backoffMs)).trim();
      for (const label of raw.split(/[;,]/).map((s) => s.trim()).filter(Boolean)) {
        const norm = label.toUpperCase().replace(/\s+/g, "_");
        counts.set(norm, (counts.get(norm) ?? 0) + 1);
        if (!seen.includes(norm)) seen.push(norm);
      }
    }
    const majority = [...counts.entries()]
      .filter(([, count]) => count >= runs / 2)
      .map(([label]) => label);
    const retained =
      majority.length > 0
        ? majority
        : [...counts.entries()].sort((a, b) => b[1] - a[1]).slice(0, 1).map(([l]) => l);
    return { id, codes: mapRawLabels(retained.join(";")), explanation };
  } catch (err) {
    return { id, codes: [], explanation: "", skipped: true };
  }
}

export async function judgePairs(
  pairs: { id: string; golden: string; rewritten: string }[],
  client: JudgeClient,
  config: JudgeConfig = {},
): Promise<PairLabels[]> {
  const out: PairLabels[] = [];
  for (const pair of pairs) {
    out.push(await judgePair(pair.id, pair.golden, pair.rewritten, client, config));
  }
  return out;
}

/** Serialize to the engine's label-file format: `id<TAB>CODE[,CODE...]`. */
export function toLabelFile(results: PairLabels[]): string {
  return results.map((r) => `${r.id}\t${r.codes.join(",")}`).join("\n") + "\n";
}
