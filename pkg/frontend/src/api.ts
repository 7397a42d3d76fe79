/** Thin client for the ranking service; at most one rank request in flight. */

import { RawJson, asObject, asString, parseRawJson } from "./rawjson.js";

export class ApiError extends Error {
  constructor(message: string, readonly code: string | null,
              readonly status: number | null) {
    super(message);
    this.name = "ApiError";
  }
}

export interface ApiResult {
  /** The exact response body; displayed numbers come from here. */
  body: string;
  doc: RawJson;
}

async function toResult(response: Response): Promise<ApiResult> {
  const body = await response.text();
  if (!response.ok) {
    let code: string | null = null;
    let message = `request failed with status ${response.status}`;
    try {
      const error = asObject(asObject(parseRawJson(body))["error"] ?? null);
      code = asString(error["code"] ?? "");
      message = asString(error["message"] ?? message);
    } catch {
      // Non-JSON error body; keep the generic message.
    }
    throw new ApiError(message, code, response.status);
  }
  return { body, doc: parseRawJson(body) };
}

export class ApiClient {
  private inflightRank: AbortController | null = null;

  constructor(private readonly baseUrl: string = "") {}

  async players(): Promise<ApiResult> {
    return toResult(await fetch(`${this.baseUrl}/api/players`));
  }

  async criteria(): Promise<ApiResult> {
    return toResult(await fetch(`${this.baseUrl}/api/criteria`));
  }

  /** POST /api/rank; a newer call aborts the previous one (latest wins). */
  async rank(requestBody: string): Promise<ApiResult> {
    this.inflightRank?.abort();
    const controller = new AbortController();
    this.inflightRank = controller;
    try {
      const response = await fetch(`${this.baseUrl}/api/rank`, {
        method: "POST",
        headers: { "content-type": "application/json" },
        body: requestBody,
        signal: controller.signal,
      });
      return await toResult(response);
    } finally {
      if (this.inflightRank === controller) this.inflightRank = null;
    }
  }
}

export function isAbortError(error: unknown): boolean {
  return error instanceof DOMException && error.name === "AbortError";
}
