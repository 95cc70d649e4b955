/**
 * Plain text to CoNLL-U: sentence splitting, French-aware tokenization and a
 * lightweight heuristic tagger/attacher.
 *
 * This adapter exists so the rewriting engine can consume any text without
 * bundling a parser. The trees are heuristic: always well-formed (contiguous
 * indices, single root, heads in range), reasonable on simple declarative
 * sentences, and tolerant of arbitrary input. Swap in a real parser by
 * piping its CoNLL-U instead whenever quality matters.
 */

import { Sentence, Token, detokenize } from "./conllu.js";

const APOSTROPHES = /[''’]/;
// "-" is absent: hyphens stay inside words (francs-maçons); a lone dash is
// caught by the tagger instead
const PUNCT = new Set([".", ",", ";", ":", "!", "?", "…", "(", ")", "«", "»", '"', "—"]);

const DETERMINERS = new Map<string, string>([
  ["le", "le"], ["la", "le"], ["les", "le"], ["l'", "le"],
  ["un", "un"], ["une", "un"], ["des", "un"],
  ["du", "du"], ["au", "au"], ["aux", "au"],
  ["ce", "ce"], ["cet", "ce"], ["cette", "ce"], ["ces", "ce"],
  ["mon", "mon"], ["ma", "mon"], ["mes", "mon"],
  ["ton", "ton"], ["ta", "ton"], ["tes", "ton"],
  ["son", "son"], ["sa", "son"], ["ses", "son"],
  ["notre", "notre"], ["nos", "notre"], ["votre", "votre"], ["vos", "votre"],
  ["leur", "leur"], ["leurs", "leur"], ["chaque", "chaque"],
  ["quelques", "quelque"], ["plusieurs", "plusieurs"],
]);

const PRONOUNS = new Map<string, string>([
  ["je", "je"], ["tu", "tu"], ["il", "il"], ["elle", "elle"], ["on", "on"],
  ["nous", "nous"], ["vous", "vous"], ["ils", "il"], ["elles", "elle"],
  ["qui", "qui"], ["que", "que"], ["qu'", "que"], ["se", "se"], ["s'", "se"],
  ["y", "y"], ["en", "en"], ["lui", "lui"], ["eux", "lui"], ["cela", "cela"],
  ["ça", "ça"], ["ceci", "ceci"], ["me", "me"], ["m'", "me"], ["te", "te"],
  ["t'", "te"], ["j'", "je"],
]);

const ADPOSITIONS = new Set([
  "à", "de", "d'", "dans", "sur", "sous", "avec", "sans", "pour", "par",
  "vers", "chez", "entre", "contre", "depuis", "pendant", "avant", "après",
  "selon", "malgré", "devant", "derrière", "jusque", "dès",
]);

const CCONJ = new Set(["et", "ou", "mais", "donc", "or", "ni", "car", "puis"]);
const SCONJ = new Set(["que", "si", "quand", "lorsque", "parce", "puisque", "comme"]);
const ADVERBS = new Set([
  "ne", "n'", "pas", "plus", "très", "bien", "mal", "ici", "là", "hier",
  "demain", "aujourd'hui", "toujours", "jamais", "souvent", "encore", "déjà",
  "aussi", "trop", "peu", "beaucoup", "vite", "fort", "alors", "ensuite",
  "vraiment", "gentiment", "longuement",
]);

const AUX_FORMS = new Map<string, [string, string]>([
  ["est", ["être", "Mood=Ind|Number=Sing|Person=3|Tense=Pres|VerbForm=Fin"]],
  ["sont", ["être", "Mood=Ind|Number=Plur|Person=3|Tense=Pres|VerbForm=Fin"]],
  ["était", ["être", "Mood=Ind|Number=Sing|Person=3|Tense=Imp|VerbForm=Fin"]],
  ["étaient", ["être", "Mood=Ind|Number=Plur|Person=3|Tense=Imp|VerbForm=Fin"]],
  ["sera", ["être", "Mood=Ind|Number=Sing|Person=3|Tense=Fut|VerbForm=Fin"]],
  ["seront", ["être", "Mood=Ind|Number=Plur|Person=3|Tense=Fut|VerbForm=Fin"]],
  ["fut", ["être", "Mood=Ind|Number=Sing|Person=3|Tense=Past|VerbForm=Fin"]],
  ["furent", ["être", "Mood=Ind|Number=Plur|Person=3|Tense=Past|VerbForm=Fin"]],
  ["a", ["avoir", "Mood=Ind|Number=Sing|Person=3|Tense=Pres|VerbForm=Fin"]],
  ["ont", ["avoir", "Mood=Ind|Number=Plur|Person=3|Tense=Pres|VerbForm=Fin"]],
  ["avait", ["avoir", "Mood=Ind|Number=Sing|Person=3|Tense=Imp|VerbForm=Fin"]],
  ["avaient", ["avoir", "Mood=Ind|Number=Plur|Person=3|Tense=Imp|VerbForm=Fin"]],
  ["aura", ["avoir", "Mood=Ind|Number=Sing|Person=3|Tense=Fut|VerbForm=Fin"]],
  ["auront", ["avoir", "Mood=Ind|Number=Plur|Person=3|Tense=Fut|VerbForm=Fin"]],
]);

export interface SentencePiece {
  text: string;
  gap: string; // whitespace between this sentence and the next
}

/** Split a line into sentences, remembering inter-sentence whitespace so the
 * round trip (splits joined with gaps) reproduces the line exactly. */
export function splitSentences(line: string): SentencePiece[] {
  const pieces: SentencePiece[] = [];
  const boundary = /([.!?…]+)(\s+)(?=[A-ZÀ-ÖØ-Þ«"])/g;
  let last = 0;
  let match: RegExpExecArray | null;
  while ((match = boundary.exec(line)) !== null) {
    const end = match.index + match[1].length;
    pieces.push({ text: line.slice(last, end), gap: match[2] });
    last = end + match[2].length;
  }
  if (last < line.length) {
    const tail = line.slice(last);
    const trimmed = tail.replace(/\s+$/, "");
    pieces.push({ text: trimmed, gap: tail.slice(trimmed.length) });
  }
  return pieces;
}

interface RawToken {
  form: string;
  spaceAfter: string;
}

export function tokenizeSentence(text: string): RawToken[] {
  const tokens: RawToken[] = [];
  const push = (form: string) => tokens.push({ form, spaceAfter: "" });
  let i = 0;
  while (i < text.length) {
    const ch = text[i];
    if (ch === " " || ch === "\t") {
      if (tokens.length > 0) tokens[tokens.length - 1].spaceAfter += ch;
      i += 1;
      continue;
    }
    if (PUNCT.has(ch)) {
      push(ch);
      i += 1;
      continue;
    }
    // word: letters, digits, internal hyphens; stops at an apostrophe, which
    // closes an elided clitic (l', d', qu'…)
    let j = i;
    while (j < text.length) {
      const c = text[j];
      if (c === " " || c === "\t" || PUNCT.has(c)) break;
      if (APOSTROPHES.test(c)) {
        j += 1; // the apostrophe stays with the clitic
        break;
      }
      j += 1;
    }
    push(text.slice(i, j));
    i = j;
  }
  return tokens;
}

function normApo(form: string): string {
  return form.replace(/’/g, "'");
}

function isCapitalized(form: string): boolean {
  return /^[A-ZÀ-ÖØ-Þ]/.test(form);
}

function tagToken(form: string, position: number): { upos: string; lemma: string; feats: string } {
  const low = normApo(form.toLowerCase());
  if (PUNCT.has(form) || form === "-") return { upos: "PUNCT", lemma: form, feats: "_" };
  if (/^\d+([.,]\d+)?$/.test(form)) return { upos: "NUM", lemma: form, feats: "_" };
  const aux = AUX_FORMS.get(low);
  if (aux) return { upos: "AUX", lemma: aux[0], feats: aux[1] };
  if (DETERMINERS.has(low)) {
    const number = /s$/.test(low) || low === "plusieurs" ? "Number=Plur" : "Number=Sing";
    return { upos: "DET", lemma: DETERMINERS.get(low)!, feats: number };
  }
  if (PRONOUNS.has(low)) return { upos: "PRON", lemma: PRONOUNS.get(low)!, feats: "_" };
  if (ADPOSITIONS.has(low)) return { upos: "ADP", lemma: low.replace(/'$/, "e"), feats: "_" };
  if (CCONJ.has(low)) return { upos: "CCONJ", lemma: low, feats: "_" };
  if (SCONJ.has(low)) return { upos: "SCONJ", lemma: low.replace(/'$/, "e"), feats: "_" };
  if (ADVERBS.has(low)) return { upos: "ADV", lemma: low.replace(/'$/, "e"), feats: "_" };
  // productive adverb endings only: -ement/-amment/-emment ("dorment" and
  // other -ent verbs must fall through to the verb heuristic)
  if (/(ement|amment|emment)$/.test(low) && low.length > 6)
    return { upos: "ADV", lemma: low, feats: "_" };
  if (position > 0 && isCapitalized(form)) return { upos: "PROPN", lemma: form, feats: "_" };
  if (/(ent|era|eront|ait|aient|èrent)$/.test(low) && low.length > 4) {
    const plural = /(ent|eront|aient|èrent)$/.test(low);
    return {
      upos: "VERB",
      lemma: low,
      feats: `Mood=Ind|Number=${plural ? "Plur" : "Sing"}|Person=3|VerbForm=Fin`,
    };
  }
  return { upos: "NOUN", lemma: low, feats: "_" };
}

/** Heuristic attachment producing a valid tree: one root, heads in range. */
function attach(tokens: Token[]): void {
  const n = tokens.length;
  // refine NOUN runs: a NOUN immediately after another NOUN head candidate
  // following a determiner chain becomes ADJ when lowercase and not first
  for (let i = 1; i < n; i++) {
    const prev = tokens[i - 1];
    const cur = tokens[i];
    if (cur.upos === "NOUN" && prev.upos === "NOUN") {
      cur.upos = "ADJ";
    }
  }
  // pick the root: first finite VERB, else first AUX, else first NOUN, else token 1
  let root =
    tokens.find((t) => t.upos === "VERB")?.index ??
    tokens.find((t) => t.upos === "AUX")?.index ??
    tokens.find((t) => t.upos === "NOUN")?.index ??
    1;
  // an AUX directly before a participle-looking word promotes it to VERB root
  for (let i = 0; i < n - 1; i++) {
    if (tokens[i].upos === "AUX") {
      const next = tokens[i + 1];
      if (next.upos === "NOUN" || next.upos === "ADJ" || next.upos === "VERB") {
        if (/(é|ée|és|ées|i|is|ie|ies|u|ue|us|ues)$/.test(next.form.toLowerCase())) {
          next.upos = "VERB";
          next.feats = "Tense=Past|VerbForm=Part";
          root = next.index;
          break;
        }
      }
    }
  }
  const rootTok = tokens[root - 1];
  rootTok.head = 0;
  rootTok.deprel = "root";

  const nextOf = (i: number, upos: string[]) =>
    tokens.slice(i).find((t) => upos.includes(t.upos));
  const prevOf = (i: number, upos: string[]) =>
    [...tokens.slice(0, i - 1)].reverse().find((t) => upos.includes(t.upos));

  let seenRoot = false;
  for (const tok of tokens) {
    if (tok.index === root) {
      seenRoot = true;
      continue;
    }
    switch (tok.upos) {
      case "DET": {
        const noun = nextOf(tok.index, ["NOUN", "PROPN"]);
        tok.head = noun ? noun.index : root;
        tok.deprel = "det";
        break;
      }
      case "ADP": {
        const noun = nextOf(tok.index, ["NOUN", "PROPN", "PRON", "VERB"]);
        tok.head = noun ? noun.index : root;
        tok.deprel = noun && noun.upos === "VERB" ? "mark" : "case";
        break;
      }
      case "ADJ": {
        const noun = prevOf(tok.index, ["NOUN", "PROPN"]) ?? nextOf(tok.index, ["NOUN", "PROPN"]);
        tok.head = noun ? noun.index : root;
        tok.deprel = "amod";
        break;
      }
      case "NOUN":
      case "PROPN": {
        tok.head = root;
        tok.deprel = seenRoot ? "obj" : "nsubj";
        break;
      }
      case "PRON": {
        const verb = nextOf(tok.index, ["VERB", "AUX"]) ?? rootTok;
        tok.head = verb.index === tok.index ? root : verb.index;
        tok.deprel = seenRoot ? "obj" : "nsubj";
        break;
      }
      case "AUX": {
        const verb = nextOf(tok.index, ["VERB"]);
        tok.head = verb ? verb.index : root;
        tok.deprel = verb ? "aux:tense" : "dep";
        break;
      }
      case "VERB": {
        tok.head = root;
        tok.deprel = "conj";
        break;
      }
      case "PUNCT":
        tok.head = root;
        tok.deprel = "punct";
        break;
      case "CCONJ": {
        const right = nextOf(tok.index, ["VERB", "NOUN", "PROPN"]);
        tok.head = right ? right.index : root;
        tok.deprel = "cc";
        break;
      }
      default:
        tok.head = root;
        tok.deprel = "dep";
    }
    if (tok.head === tok.index) {
      tok.head = root === tok.index ? 0 : root;
    }
  }
}

export function annotateSentence(text: string, id: string): Sentence {
  const raw = tokenizeSentence(text);
  const tokens: Token[] = raw.map((r, i) => {
    const tag = tagToken(r.form, i);
    return {
      index: i + 1,
      form: r.form,
      lemma: tag.lemma,
      upos: tag.upos,
      feats: tag.feats,
      head: 0,
      deprel: "dep",
      spaceAfter: r.spaceAfter,
    };
  });
  if (tokens.length > 0) attach(tokens);
  const sentence: Sentence = { id, text, tokens };
  const rebuilt = detokenize(tokens);
  if (rebuilt !== text) {
    throw new Error(`detokenization mismatch: ${JSON.stringify(rebuilt)} != ${JSON.stringify(text)}`);
  }
  return sentence;
}

/** Annotate raw text (possibly many lines, many sentences per line). */
export function annotate(rawText: string): Sentence[] {
  const sentences: Sentence[] = [];
  let counter = 0;
  for (const line of rawText.split("\n")) {
    if (!line.trim()) continue;
    for (const piece of splitSentences(line)) {
      counter += 1;
      sentences.push(annotateSentence(piece.text, `s${counter}`));
    }
  }
  return sentences;
}
