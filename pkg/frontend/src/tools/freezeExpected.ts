// Regenerates the stored expected prompt files (acceptance targets).
// Run only when the template text intentionally changes: npm run freeze-expected
import { writeFileSync } from "node:fs";
import { join } from "node:path";

import { buildPrompt } from "../prompts.js";

const out = join(import.meta.dirname ?? ".", "..", "..", "expected");

writeFileSync(
  join(out, "prompt_base.txt"),
  buildPrompt({ kind: "BASE", sentence: "Les soldats arrivèrent dans la ville." }),
);
writeFileSync(
  join(out, "prompt_dict_sg.txt"),
  buildPrompt({
    kind: "DICT_SG",
    sentence: "Les soldats arrivèrent dans la ville.",
    memberNouns: ["soldats"],
    collectives: ["armée"],
  }),
);
writeFileSync(
  join(out, "prompt_dict_pl.txt"),
  buildPrompt({
    kind: "DICT_PL",
    sentence: "Les soldats et les policiers arrivèrent dans la ville.",
    memberNouns: ["soldats", "policiers"],
    collectives: ["armée", "police"],
  }),
);
writeFileSync(
  join(out, "prompt_corr.txt"),
  buildPrompt({ kind: "CORR", sentence: "L'armée arriva dans la ville." }),
);
console.log("expected prompt files regenerated");
