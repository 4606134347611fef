/**
 * Typed client for the scholargraph HTTP API.
 *
 * All graph data rendered by the studio flows through this client; the UI
 * never computes query results itself. Executions are single-flight: a
 * new run aborts the one still in the air, so stale traces can never
 * overwrite fresh ones.
 */

import type { PipelineDocument } from "./document.js";

export interface ErrorEnvelope {
  code: string;
  message: string;
  details: Record<string, unknown>;
}

export class ServiceError extends Error {
  override name = "ServiceError";

  constructor(
    readonly status: number,
    readonly envelope: ErrorEnvelope,
  ) {
    super(envelope.message);
  }
}

export interface HealthInfo {
  status: string;
  version: string;
  total_entities: number;
  total_relations: number;
}

export interface SearchHit {
  iri: string;
  type: string;
  label: string;
}

export interface SearchResult {
  iris: string[];
  entities: SearchHit[];
  limit: number;
  offset: number;
}

export interface ConceptDetail {
  iri: string;
  type: string;
  name: string;
  dbpedia_url: string | null;
  attributes: Record<string, string>;
}

export interface Violation {
  code: string;
  message: string;
  components: string[];
}

export interface ValidationResult {
  valid: boolean;
  violations: Violation[];
}

export interface ComponentResult {
  status: "ok" | "error" | "skipped";
  port: string | null;
  payload: Record<string, unknown> | null;
  error: string | null;
  duration_ms: number;
}

export interface ExecutionTrace {
  order: string[];
  components: Record<string, ComponentResult>;
}

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class StudioApi {
  private readonly fetchImpl: FetchLike;
  private inflightExecution: AbortController | null = null;

  constructor(
    readonly baseUrl: string,
    fetchImpl?: FetchLike,
  ) {
    this.fetchImpl = fetchImpl ?? ((input, init) => fetch(input, init));
  }

  private url(path: string): string {
    return this.baseUrl.replace(/\/+$/, "") + path;
  }

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await this.fetchImpl(this.url(path), init);
    const body = (await response.json()) as unknown;
    if (!response.ok) {
      const envelope = (body as { error?: ErrorEnvelope }).error ?? {
        code: "internal",
        message: `unexpected response ${response.status}`,
        details: {},
      };
      throw new ServiceError(response.status, envelope);
    }
    return body as T;
  }

  healthz(): Promise<HealthInfo> {
    return this.request<HealthInfo>("/healthz");
  }

  stats(): Promise<Record<string, unknown>> {
    return this.request("/stats");
  }

  searchEntities(q: string, type: string, limit = 20, offset = 0): Promise<SearchResult> {
    const query = new URLSearchParams({
      q,
      type,
      limit: String(limit),
      offset: String(offset),
    });
    return this.request<SearchResult>(`/entities/search?${query}`);
  }

  conceptDetail(iri: string): Promise<ConceptDetail> {
    return this.request<ConceptDetail>(`/concepts/${encodeURIComponent(iri)}`);
  }

  validatePipeline(doc: PipelineDocument): Promise<ValidationResult> {
    return this.request<ValidationResult>("/pipelines/validate", {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(doc),
    });
  }

  /** Runs the pipeline, aborting any execution still in flight. */
  executePipeline(doc: PipelineDocument): Promise<ExecutionTrace> {
    this.inflightExecution?.abort();
    const controller = new AbortController();
    this.inflightExecution = controller;
    return this.request<ExecutionTrace>("/pipelines/execute", {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(doc),
      signal: controller.signal,
    }).finally(() => {
      if (this.inflightExecution === controller) {
        this.inflightExecution = null;
      }
    });
  }
}
