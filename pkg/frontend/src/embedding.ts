/**
 * Deterministic sentence embeddings for majority selection over judge
 * outputs: a bag of character trigrams. Any stronger embedder (an API or a
 * local model) can be plugged in through the same interface.
 */

export interface Embedder {
  embed(texts: string[]): number[][];
}

export class CharNgramEmbedder implements Embedder {
  constructor(private n = 3) {}

  embed(texts: string[]): number[][] {
    const vocab = new Map<string, number>();
    const counts: Map<number, number>[] = [];
    for (const text of texts) {
      const bag = new Map<number, number>();
      const padded = `  ${text.toLowerCase()} `;
      for (let i = 0; i <= padded.length - this.n; i++) {
        const gram = padded.slice(i, i + this.n);
        let id = vocab.get(gram);
        if (id === undefined) {
          id = vocab.size;
          vocab.set(gram, id);
        }
        bag.set(id, (bag.get(id) ?? 0) + 1);
      }
      counts.push(bag);
    }
    return counts.map((bag) => {
      const vec = new Array<number>(vocab.size).fill(0);
      for (const [id, count] of bag) vec[id] = count;
      return vec;
    });
  }
}

export function cosine(a: number[], b: number[]): number {
  let dot = 0;
  let na = 0;
  let nb = 0;
  const len = Math.max(a.length, b.length);
  for (let i = 0; i < len; i++) {
    const x = a[i] ?? 0;
    const y = b[i] ?? 0;
    dot += x * y;
    na += x * x;
    nb += y * y;
  }
  if (na === 0 || nb === 0) return 0;
  return dot / Math.sqrt(na * nb);
}

/** Index of the text closest on average to all the others (the "most
 * frequent" answer under embedding similarity). Ties break to the earliest. */
export function centralIndex(texts: string[], embedder: Embedder): number {
  if (texts.length === 0) throw new Error("no texts to select from");
  const vectors = embedder.embed(texts);
  let best = 0;
  let bestScore = -Infinity;
  for (let i = 0; i < vectors.length; i++) {
    let score = 0;
    for (let j = 0; j < vectors.length; j++) {
      if (i !== j) score += cosine(vectors[i], vectors[j]);
    }
    if (score > bestScore + 1e-12) {
      bestScore = score;
      best = i;
    }
  }
  return best;
}
