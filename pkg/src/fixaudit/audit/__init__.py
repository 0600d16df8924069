from .claims import CLAIMS, AuditConfig
from .corpus import ConfigError, CorpusSpec, corpus, exhaustive, exhaustive_upto, family, ingest
from .harness import AuditReport, reverify, reverify_report, run_audit
from .minimize import minimize
