"""Concept normalization through an entity-linking service.

The HTTP client speaks the DBpedia Spotlight annotate protocol; any
endpoint honoring the same request/response shape can be substituted via
the base URL, and ``StaticLinker`` provides a fully offline stand-in.
Linker failures never fail a build: normalization falls back to a local
lowercase/whitespace collapse and logs a warning.
"""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Protocol
from urllib.parse import unquote, urlparse

import requests

from ..corpus.records import PaperRecord
from ..errors import ScholarGraphError

log = logging.getLogger(__name__)

DEFAULT_CONFIDENCE = 0.5


class LinkerTransportError(ScholarGraphError):
    """The linking service could not be reached or answered abnormally."""


@dataclass(frozen=True)
class LinkedResource:
    uri: str
    surface_form: str
    similarity_score: float


@dataclass(frozen=True)
class NormalizedConcept:
    canonical_name: str
    dbpedia_url: str | None = None

    @property
    def linked(self) -> bool:
        return self.dbpedia_url is not None


class EntityLinkingClient(Protocol):
    def link(self, text: str, confidence: float) -> list[LinkedResource]: ...


class SpotlightClient:
    """HTTP client for a Spotlight-compatible /annotate endpoint."""

    def __init__(
        self,
        base_url: str,
        timeout: float = 10.0,
        session: requests.Session | None = None,
    ):
        self.base_url = base_url.rstrip("/")
        self.timeout = timeout
        self._session = session or requests.Session()

    def link(self, text: str, confidence: float) -> list[LinkedResource]:
        try:
            response = self._session.get(
                f"{self.base_url}/annotate",
                params={"text": text, "confidence": confidence},
                headers={"Accept": "application/json"},
                timeout=self.timeout,
            )
            response.raise_for_status()
            payload = response.json()
        except requests.RequestException as exc:
            raise LinkerTransportError(f"entity linking request failed: {exc}") from exc
        except ValueError as exc:
            raise LinkerTransportError(f"entity linking returned non-JSON: {exc}") from exc
        resources = payload.get("Resources") or payload.get("resources") or []
        out = []
        for res in resources:
            uri = res.get("@URI") or res.get("URI")
            if not uri:
                continue
            out.append(
                LinkedResource(
                    uri=uri,
                    surface_form=res.get("@surfaceForm") or res.get("surfaceForm") or text,
                    similarity_score=float(
                        res.get("@similarityScore") or res.get("similarityScore") or 0.0
                    ),
                )
            )
        return out


class StaticLinker:
    """Offline linker backed by a fixed surface -> resource mapping."""

    def __init__(self, mapping: dict[str, LinkedResource]):
        self._mapping = {k.casefold(): v for k, v in mapping.items()}

    def link(self, text: str, confidence: float) -> list[LinkedResource]:
        res = self._mapping.get(text.casefold())
        return [res] if res is not None else []


def local_normalize(surface: str) -> str:
    """Lowercase and collapse internal whitespace."""
    return " ".join(surface.lower().split())


def resource_label(uri: str) -> str:
    """Human label derived from a resource URI's last path segment."""
    tail = unquote(urlparse(uri).path.rsplit("/", 1)[-1])
    return tail.replace("_", " ").strip() or uri


def normalize_concept(
    surface: str,
    linker: EntityLinkingClient | None,
    confidence: float = DEFAULT_CONFIDENCE,
) -> NormalizedConcept:
    """Canonicalize one surface form.

    The best linked resource at or above the confidence threshold wins and
    contributes both the canonical name and its URL; otherwise (including
    transport failure, which only warns) the surface is normalized locally.
    """
    if not surface:
        raise ValueError("surface must be non-empty")
    if linker is not None:
        try:
            resources = linker.link(surface, confidence)
        except LinkerTransportError as exc:
            log.warning("linker unavailable for %r, using local normalization: %s", surface, exc)
            resources = []
        eligible = [r for r in resources if r.similarity_score >= confidence]
        if eligible:
            best = max(eligible, key=lambda r: r.similarity_score)
            return NormalizedConcept(canonical_name=resource_label(best.uri), dbpedia_url=best.uri)
    return NormalizedConcept(canonical_name=local_normalize(surface))


def normalize_concepts(
    records: Iterable[PaperRecord],
    linker: EntityLinkingClient | None,
    confidence: float = DEFAULT_CONFIDENCE,
    max_workers: int = 4,
) -> dict[str, NormalizedConcept]:
    """Annotate every concept mention in place, memoized per surface form.

    Linker calls run on a bounded thread pool; the returned map records the
    outcome per distinct surface.
    """
    surfaces: list[str] = []
    seen: set[str] = set()
    for rec in records:
        for mention in rec.concepts:
            if mention.surface not in seen:
                seen.add(mention.surface)
                surfaces.append(mention.surface)
    resolved: dict[str, NormalizedConcept] = {}
    if surfaces:
        if linker is None or max_workers <= 1:
            for surface in surfaces:
                resolved[surface] = normalize_concept(surface, linker, confidence)
        else:
            with ThreadPoolExecutor(max_workers=max_workers) as pool:
                for surface, result in zip(
                    surfaces,
                    pool.map(lambda s: normalize_concept(s, linker, confidence), surfaces),
                ):
                    resolved[surface] = result
    for rec in records:
        for mention in rec.concepts:
            outcome = resolved.get(mention.surface)
            if outcome is not None:
                mention.canonical = outcome.canonical_name
                mention.dbpedia_url = outcome.dbpedia_url
    return resolved
