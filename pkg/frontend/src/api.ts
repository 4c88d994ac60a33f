import type { AnalysisDocument, FamilyGraph, FamilyInfo, GraphPayload } from "./types.js";

export class PreconditionError extends Error {
  constructor(public condition: string) {
    super(condition);
  }
}

export interface ApiClient {
  analyze(payload: GraphPayload): Promise<AnalysisDocument>;
  families(): Promise<FamilyInfo[]>;
  family(name: string, args: number[]): Promise<FamilyGraph>;
}

export function httpClient(base: string, fetchFn: typeof fetch = fetch): ApiClient {
  async function post<T>(path: string, body: unknown): Promise<T> {
    const resp = await fetchFn(base + path, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
    });
    if (resp.status === 422) {
      const doc = await resp.json();
      throw new PreconditionError(doc.detail ?? "precondition");
    }
    if (!resp.ok) {
      throw new Error(`${path}: HTTP ${resp.status}`);
    }
    return resp.json() as Promise<T>;
  }
  async function get<T>(path: string): Promise<T> {
    const resp = await fetchFn(base + path);
    if (!resp.ok) {
      throw new Error(`${path}: HTTP ${resp.status}`);
    }
    return resp.json() as Promise<T>;
  }
  return {
    analyze: (payload) => post<AnalysisDocument>("/api/analyze", payload),
    families: () => get<FamilyInfo[]>("/api/families"),
    family: (name, args) =>
      get<FamilyGraph>(
        `/api/families/${name}` + (args.length ? `?args=${args.join(",")}` : "")
      ),
  };
}
