#!/usr/bin/env node
/**
 * neutre-llm: annotation and LLM glue around the rewriting engine.
 *
 *   neutre-llm annotate --input raw.txt --output parses.conllu [--parser-cmd CMD]
 *   neutre-llm prompt --kind base|dict-sg|dict-pl|corr --sentence "..." [--nm a,b] [--ncoll x,y]
 *   neutre-llm judge --pairs pairs.tsv --output labels.tsv [--runs 10] [--model NAME] [--mock script.json]
 *
 * judge credentials come from NEUTRE_LLM_API_URL / NEUTRE_LLM_API_KEY only.
 */

import { execFileSync } from "node:child_process";
import { readFileSync, realpathSync, writeFileSync } from "node:fs";
import { fileURLToPath } from "node:url";
import { parseArgs } from "node:util";

import { annotate } from "./annotate.js";
import { HttpJudgeClient, MockJudgeClient } from "./client.js";
import { serializeCorpus } from "./conllu.js";
import { JudgeClient, judgePairs, toLabelFile } from "./judge.js";
import { PromptKind, buildPrompt } from "./prompts.js";

function fail(message: string, code = 1): never {
  process.stderr.write(`error: ${message}\n`);
  process.exit(code);
}

function cmdAnnotate(argv: string[]): void {
  const { values } = parseArgs({
    args: argv,
    options: {
      input: { type: "string" },
      output: { type: "string" },
      "parser-cmd": { type: "string" },
    },
  });
  if (!values.input || !values.output) fail("annotate needs --input and --output");
  const raw = readFileSync(values.input, "utf-8");
  let conllu: string;
  if (values["parser-cmd"]) {
    // external parser mode: the command reads raw text on stdin, writes CoNLL-U
    conllu = execFileSync("sh", ["-c", values["parser-cmd"]], { input: raw, encoding: "utf-8" });
  } else {
    conllu = serializeCorpus(annotate(raw));
  }
  writeFileSync(values.output, conllu, "utf-8");
  process.stdout.write(`annotated ${values.input} -> ${values.output}\n`);
}

function cmdPrompt(argv: string[]): void {
  const { values } = parseArgs({
    args: argv,
    options: {
      kind: { type: "string" },
      sentence: { type: "string" },
      nm: { type: "string" },
      ncoll: { type: "string" },
      output: { type: "string" },
    },
  });
  const kinds: Record<string, PromptKind> = {
    base: "BASE",
    "dict-sg": "DICT_SG",
    "dict-pl": "DICT_PL",
    corr: "CORR",
  };
  if (!values.kind || !(values.kind in kinds)) fail("prompt needs --kind base|dict-sg|dict-pl|corr");
  if (!values.sentence) fail("prompt needs --sentence");
  const prompt = buildPrompt({
    kind: kinds[values.kind],
    sentence: values.sentence,
    memberNouns: values.nm ? values.nm.split(",") : undefined,
    collectives: values.ncoll ? values.ncoll.split(",") : undefined,
  });
  if (values.output) writeFileSync(values.output, prompt, "utf-8");
  else process.stdout.write(prompt + "\n");
}

async function cmdJudge(argv: string[]): Promise<void> {
  const { values } = parseArgs({
    args: argv,
    options: {
      pairs: { type: "string" },
      output: { type: "string" },
      runs: { type: "string" },
      model: { type: "string" },
      mock: { type: "string" },
    },
  });
  if (!values.pairs || !values.output) fail("judge needs --pairs and --output");
  const pairs = readFileSync(values.pairs, "utf-8")
    .split("\n")
    .filter((line) => line.trim())
    .map((line, i) => {
      const [golden, rewritten] = line.split("\t");
      if (rewritten === undefined) fail(`${values.pairs}:${i + 1}: expected gold<TAB>hypothesis`);
      return { id: `s${i + 1}`, golden, rewritten };
    });
  let client: JudgeClient;
  if (values.mock) client = new MockJudgeClient(values.mock);
  else client = new HttpJudgeClient(values.model ?? "judge-default");
  const runs = values.runs ? Number(values.runs) : 10;
  const results = await judgePairs(pairs, client, { runs });
  writeFileSync(values.output, toLabelFile(results), "utf-8");
  const skipped = results.filter((r) => r.skipped).length;
  process.stdout.write(`${results.length} pairs labeled (${skipped} skipped)\n`);
}

export async function main(argv = process.argv.slice(2)): Promise<void> {
  const [command, ...rest] = argv;
  switch (command) {
    case "annotate":
      return cmdAnnotate(rest);
    case "prompt":
      return cmdPrompt(rest);
    case "judge":
      return cmdJudge(rest);
    default:
      fail("usage: neutre-llm annotate|prompt|judge ...");
  }
}

function invokedDirectly(): boolean {
  if (!process.argv[1]) return false;
  try {
    // realpath resolves the npm bin symlink back to dist/cli.js
    return realpathSync(process.argv[1]) === fileURLToPath(import.meta.url);
  } catch {
    return false;
  }
}

if (invokedDirectly()) {
  main().catch((err) => fail(String(err), 2));
}
