from .app import app, create_app
from .handlers import handle_kernelize, handle_lemma, handle_verify

__all__ = ["app", "create_app", "handle_kernelize", "handle_lemma", "handle_verify"]
