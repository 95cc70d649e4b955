/**
 * Judge clients. The HTTP client posts to a configurable endpoint and reads
 * credentials from the environment only; the mock client replays canned
 * responses from a JSON file for offline runs and tests.
 */

import { readFileSync } from "node:fs";

import { JudgeClient } from "./judge.js";

export class HttpJudgeClient implements JudgeClient {
  private url: string;
  private key: string;
  constructor(public model: string, public temperature = 1.0) {
    const url = process.env.NEUTRE_LLM_API_URL;
    const key = process.env.NEUTRE_LLM_API_KEY;
    if (!url || !key) {
      throw new Error("NEUTRE_LLM_API_URL and NEUTRE_LLM_API_KEY must be set");
    }
    this.url = url;
    this.key = key;
  }

  async complete(system: string, user: string): Promise<string> {
    const response = await fetch(this.url, {
      method: "POST",
      headers: {
        "content-type": "application/json",
        authorization: `Bearer ${this.key}`,
      },
      body: JSON.stringify({
        model: this.model,
        temperature: this.temperature,
        system,
        messages: [{ role: "user", content: user }],
      }),
    });
    if (!response.ok) {
      throw new Error(`judge API error ${response.status}`);
    }
    const payload = (await response.json()) as { text?: string; content?: { text: string }[] };
    if (typeof payload.text === "string") return payload.text;
    if (payload.content?.[0]?.text) return payload.content[0].text;
    throw new Error("judge API returned no text");
  }
}

interface MockScript {
  // responses keyed by a substring of the user prompt; "*" is the fallback.
  // each entry is a list cycled through on repeated calls.
  [key: string]: string[];
}

export class MockJudgeClient implements JudgeClient {
  private script: MockScript;
  private cursors = new Map<string, number>();

  constructor(path: string) {
    this.script = JSON.parse(readFileSync(path, "utf-8"));
  }

  async complete(_system: string, user: string): Promise<string> {
    const keys = Object.keys(this.script).filter((k) => k !== "*");
    // suffix matches first: the prompt tail identifies the pair and stage
    const key = keys.find((k) => user.endsWith(k)) ?? keys.find((k) => user.includes(k)) ?? "*";
    const responses = this.script[key];
    if (!responses || responses.length === 0) {
      throw new Error(`mock script has no responses for ${key}`);
    }
    const cursor = this.cursors.get(key) ?? 0;
    this.cursors.set(key, cursor + 1);
    return responses[cursor % responses.length];
  }
}
