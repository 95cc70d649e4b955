/** CoNLL-U sentence model: 10 columns per token, `# text` comment mandatory. */

export interface Token {
  index: number; // 1-based
  form: string;
  lemma: string;
  upos: string;
  feats: string; // "_" when empty
  head: number; // 0 = root
  deprel: string;
  spaceAfter: string; // exact whitespace following the token ("" before punctuation)
}

export interface Sentence {
  id: string;
  text: string;
  tokens: Token[];
}

export function serializeSentence(sentence: Sentence): string {
  const lines: string[] = [];
  if (sentence.id) lines.push(`# sent_id = ${sentence.id}`);
  lines.push(`# text = ${sentence.text}`);
  sentence.tokens.forEach((tok, i) => {
    const isLast = i === sentence.tokens.length - 1;
    let misc = "_";
    if (!isLast) {
      if (tok.spaceAfter === "") misc = "SpaceAfter=No";
      else if (tok.spaceAfter !== " ")
        misc = `SpacesAfter=${tok.spaceAfter.replace(/ /g, "\\s").replace(/\t/g, "\\t")}`;
    }
    lines.push(
      [
        String(tok.index),
        tok.form,
        tok.lemma,
        tok.upos,
        "_",
        tok.feats || "_",
        String(tok.head),
        tok.deprel,
        "_",
        misc,
      ].join("\t"),
    );
  });
  return lines.join("\n") + "\n";
}

export function serializeCorpus(sentences: Sentence[]): string {
  return sentences.map(serializeSentence).join("\n");
}

/** Rebuild the surface string; must equal the sentence text byte for byte. */
export function detokenize(tokens: Token[]): string {
  let out = "";
  tokens.forEach((tok, i) => {
    out += tok.form;
    if (i < tokens.length - 1) out += tok.spaceAfter;
  });
  return out;
}
