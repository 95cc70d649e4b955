/**
 * Instruction prompts for an instruct model doing gender-neutral rewriting.
 *
 * Four kinds: BASE (no dictionary guidance), DICT_SG / DICT_PL (member
 * noun(s) and target collective(s) named explicitly), CORR (fix agreement
 * errors in a rule-engine output). Each prompt carries a fixed few-shot
 * block formatted "[source] → [target]" and ends with the input sentence
 * and a trailing arrow for the model to complete.
 */

import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";

export type PromptKind = "BASE" | "DICT_SG" | "DICT_PL" | "CORR";

export interface FewShotPair {
  source: string;
  target: string;
}

const HERE = dirname(fileURLToPath(import.meta.url));

function loadPairs(name: string): FewShotPair[] {
  for (const root of [join(HERE, "..", "data"), join(HERE, "..", "..", "data")]) {
    try {
      return JSON.parse(readFileSync(join(root, name), "utf-8"));
    } catch {
      // try the next candidate root (src/ during tests, dist/ after build)
    }
  }
  throw new Error(`few-shot data file not found: ${name}`);
}

export const BASE_EXAMPLES: FewShotPair[] = loadPairs("fewshot_base.json");
export const CORR_EXAMPLES: FewShotPair[] = loadPairs("fewshot_corr.json");

const INSTRUCTIONS: Record<PromptKind, string> = {
  BASE:
    "Make this French sentence inclusive by replacing generic masculine nouns " +
    "with their French collective noun equivalents. " +
    "Generate the final sentence only without any comments nor notes.",
  DICT_SG:
    "Make this French sentence inclusive by replacing generic masculine noun {NM} " +
    "with its respective French collective noun equivalent {NCOLL}. " +
    "Generate the final sentence only without any comments nor notes.",
  DICT_PL:
    "Make this French sentence inclusive by replacing generic masculine nouns {NM} " +
    "with their respective French collective noun equivalents {NCOLL}. " +
    "Generate the final sentence only without any comments nor notes.",
  CORR:
    "Correct grammar in this French sentence. " +
    "Generate the final sentence only without any comments nor notes.",
};

export function formatExamples(pairs: FewShotPair[]): string {
  return pairs.map((p) => `${p.source} → ${p.target}`).join("\n");
}

export interface PromptInput {
  kind: PromptKind;
  sentence: string;
  memberNouns?: string[];
  collectives?: string[];
}

export function buildPrompt(input: PromptInput): string {
  const { kind, sentence } = input;
  let instruction = INSTRUCTIONS[kind];
  if (kind === "DICT_SG" || kind === "DICT_PL") {
    const nm = input.memberNouns ?? [];
    const ncoll = input.collectives ?? [];
    if (nm.length === 0 || ncoll.length === 0) {
      throw new Error(`${kind} prompts need member nouns and collectives`);
    }
    if (kind === "DICT_SG" && (nm.length !== 1 || ncoll.length !== 1)) {
      throw new Error("DICT_SG takes exactly one member noun and one collective");
    }
    if (nm.length !== ncoll.length) {
      throw new Error("member noun and collective lists must match");
    }
    instruction = instruction
      .replace("{NM}", nm.join(", "))
      .replace("{NCOLL}", ncoll.join(", "));
  }
  const examples = kind === "CORR" ? CORR_EXAMPLES : BASE_EXAMPLES;
  return `${instruction}\n\n${formatExamples(examples)}\n\n${sentence} →`;
}

/** The assistant-side prefill used with the rewriting prompts. */
export const ASSISTANT_PREFILL = "Here is the output sentence:";

/** Rewriting calls are deterministic; only the judge samples. */
export const REWRITE_TEMPERATURE = 0;
