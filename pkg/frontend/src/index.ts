export { annotate, annotateSentence, splitSentences, tokenizeSentence } from "./annotate.js";
export { HttpJudgeClient, MockJudgeClient } from "./client.js";
export { detokenize, serializeCorpus, serializeSentence } from "./conllu.js";
export type { Sentence, Token } from "./conllu.js";
export { CharNgramEmbedder, centralIndex, cosine } from "./embedding.js";
export {
  EXPLANATION_SYSTEM,
  LABEL_SYSTEM,
  buildExplanationPrompt,
  buildLabelPrompt,
  judgePair,
  judgePairs,
  mapRawLabels,
  toLabelFile,
} from "./judge.js";
export type { JudgeClient, JudgeConfig, PairLabels } from "./judge.js";
export {
  ASSISTANT_PREFILL,
  BASE_EXAMPLES,
  CORR_EXAMPLES,
  REWRITE_TEMPERATURE,
  buildPrompt,
  formatExamples,
} from "./prompts.js";
export type { FewShotPair, PromptInput, PromptKind } from "./prompts.js";
