"""JSON document models for algebra elements."""

from src.models.documents import (
    ElementDoc,
    TermDoc,
    decode_coeff,
    doc_to_element,
    element_to_doc,
    encode_coeff,
)

__all__ = [
    "ElementDoc",
    "TermDoc",
    "decode_coeff",
    "doc_to_element",
    "element_to_doc",
    "encode_coeff",
]
