import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";

import { describe, expect, it } from "vitest";

import { annotate, splitSentences, tokenizeSentence } from "../src/annotate.js";
import { Sentence, detokenize, serializeCorpus } from "../src/conllu.js";

const HERE = dirname(fileURLToPath(import.meta.url));

function assertValid(sentence: Sentence): void {
  const n = sentence.tokens.length;
  let roots = 0;
  sentence.tokens.forEach((tok, i) => {
    expect(tok.index).toBe(i + 1);
    expect(tok.head).toBeGreaterThanOrEqual(0);
    expect(tok.head).toBeLessThanOrEqual(n);
    expect(tok.head).not.toBe(tok.index);
    if (tok.head === 0) roots += 1;
  });
  expect(roots).toBe(1);
  expect(detokenize(sentence.tokens)).toBe(sentence.text);
}

describe("annotate", () => {
  it("produces the frozen seven-token parse for the reference sentence", () => {
    const conllu = serializeCorpus(annotate("Les lecteurs assidus financent le journal."));
    const frozen = readFileSync(join(HERE, "..", "fixtures", "annotate_example4.conllu"), "utf-8");
    expect(conllu).toBe(frozen);
    expect(conllu.split("\n").filter((l) => /^\d/.test(l)).length).toBe(7);
  });

  it("round-trips raw text through detokenization", () => {
    const lines = [
      "Les soldats arrivèrent. Ils étaient fatigués.",
      "L'armée, dit-on, campait près du fleuve.",
      "Bonjour !  Double espace conservé.",
      "Les francs-maçons se réunissaient qu'il pleuve ou non.",
    ];
    for (const line of lines) {
      const pieces = splitSentences(line);
      const rebuilt = pieces.map((p) => p.text + p.gap).join("");
      expect(rebuilt).toBe(line);
      for (const piece of pieces) {
        const [sentence] = annotate(piece.text);
        expect(detokenize(sentence.tokens)).toBe(piece.text);
      }
    }
  });

  it("splits clitics on the apostrophe", () => {
    const forms = tokenizeSentence("L'armée qu'il regarde n'arrive pas.").map((t) => t.form);
    expect(forms).toEqual(["L'", "armée", "qu'", "il", "regarde", "n'", "arrive", "pas", "."]);
  });

  it("returns nothing for empty input", () => {
    expect(annotate("")).toEqual([]);
    expect(annotate("\n\n")).toEqual([]);
  });

  it("tolerates non-French input and still emits valid trees", () => {
    const sentences = annotate("colorless green ideas sleep furiously\n42 !!! xyz");
    expect(sentences.length).toBeGreaterThan(0);
    for (const sentence of sentences) assertValid(sentence);
  });

  it("keeps every parse well-formed on assorted French", () => {
    const text = [
      "Hier, les soldats sont arrivés dans la ville.",
      "Le préfet a parlé aux manifestants et leur a donné une réponse.",
      "Quelques mots étranges ; une parenthèse (comme ceci) et des «guillemets».",
    ].join("\n");
    for (const sentence of annotate(text)) assertValid(sentence);
  });

  it("numbers sentences across lines", () => {
    const sentences = annotate("Une phrase. Une autre phrase.\nEncore une.");
    expect(sentences.map((s) => s.id)).toEqual(["s1", "s2", "s3"]);
  });
});
