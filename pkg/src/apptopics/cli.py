"""Command-line pipeline: extract, preprocess, fit, classify, similarity,
topicmap.

Every subcommand takes --config plus explicit input/output paths, exits
nonzero on error, and writes data files atomically. Diagnostics go to
stderr; data only ever goes to the output files.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from . import classify as classify_mod
from . import datasets, extract, preprocess, textstats, topicmodel
from .config import PipelineConfig, parse_config

log = logging.getLogger("apptopics")


def _load_config(args) -> PipelineConfig:
    if args.config:
        return parse_config(Path(args.config))
    return PipelineConfig()


def _load_dictionary(cfg: PipelineConfig) -> textstats.EnglishDictionary:
    if cfg.dictionary is not None:
        return textstats.EnglishDictionary.load(cfg.dictionary)
    return textstats.EnglishDictionary.load_default()


def _apply_seed_override(cfg: PipelineConfig, args) -> None:
    seed = getattr(args, "seed", None)
    if seed is not None:
        lda = cfg.lda
        cfg.lda = topicmodel.LdaConfig(
            n_topics=lda.n_topics, alpha=lda.alpha, beta=lda.beta,
            n_iterations=lda.n_iterations, burn_in=lda.burn_in, seed=seed,
        )


def cmd_extract(args) -> int:
    cfg = _load_config(args)
    input_root = Path(args.input_root) if args.input_root else cfg.input_root
    if input_root is None:
        raise ValueError("no input root: pass --input-root or set input_root in the config")
    dictionary = _load_dictionary(cfg)
    stopwords = extract.StopwordTable.extended(cfg.extra_stopwords)
    ocr = extract.make_ocr_adapter(cfg.ocr, cfg.ocr_command)
    ocr.validate()

    apps = extract.discover_app_dirs(Path(input_root))
    if not apps:
        raise ValueError(f"no app directories under {input_root}")
    rows: list[datasets.DatasetRow] = []
    flags: dict[str, tuple[str, textstats.TextQualityFlags]] = {}
    for app in apps:
        try:
            rec = extract.extract_app(app, ocr, stopwords)
        except Exception as exc:  # per-app failure: row omitted, run continues
            log.warning("skipping app %s: %s", app.root_path.name, exc)
            continue
        rows.append(datasets.DatasetRow(
            sha256=app.sha256, package_id=app.package_id,
            method_words=rec.method_words, xml_words=rec.xml_words,
            gui_words=rec.gui_words,
        ))
        flags[app.sha256] = (app.package_id, textstats.compute_quality_flags(
            rec, dictionary, cfg.encryption,
            obfuscation_max_len=cfg.obfuscated_max_len,
            obfuscation_ratio=cfg.obfuscated_short_ratio,
        ))
        log.info("extracted %s (%d method ids, %d xml words, %d gui words)",
                 app.package_id, len(rec.method_identifiers),
                 len(rec.xml_words), len(rec.gui_words))
    rows.sort(key=lambda r: r.sha256)
    datasets.write_dataset(Path(args.out), rows)
    datasets.write_quality_flags(Path(args.flags_out), flags)
    log.info("wrote %d rows to %s", len(rows), args.out)
    return 0


def cmd_preprocess(args) -> int:
    cfg = _load_config(args)
    dictionary = _load_dictionary(cfg)
    rows = datasets.read_dataset(Path(args.dataset))
    flags = datasets.read_quality_flags(Path(args.flags))
    prune = cfg.prune
    if args.no_prune:
        prune = False
    raw = [(r.sha256, r.package_id, r.method_words, r.xml_words, r.gui_words)
           for r in rows]
    corpus, removals = preprocess.preprocess_corpus(
        raw, flags, dictionary, cfg.thresholds, prune=prune)
    datasets.write_dataset(Path(args.out),
                           [datasets.processed_to_row(app) for app in corpus])
    datasets.write_removal_report(Path(args.report), removals)
    log.info("kept %d apps, removed %d", len(corpus), len(removals))
    return 0


def _dataset_to_docs(rows) -> list[topicmodel.Document]:
    return [(r.sha256, r.method_words + r.xml_words + r.gui_words) for r in rows]


def cmd_fit(args) -> int:
    cfg = _load_config(args)
    _apply_seed_override(cfg, args)
    rows = datasets.read_dataset(Path(args.dataset))
    if not rows:
        raise ValueError(f"no documents in {args.dataset}")
    if len(rows) < cfg.lda.n_topics:
        log.warning("only %d documents for %d topics", len(rows), cfg.lda.n_topics)
    docs = _dataset_to_docs(rows)
    model = topicmodel.fit_gibbs(docs, cfg.lda)
    datasets.save_model(Path(args.model_out), model)
    datasets.write_topic_keys(Path(args.keys_out), model)
    datasets.write_composition(Path(args.composition_out), model)
    log.info("fitted %d topics over %d documents (V=%d)",
             cfg.lda.n_topics, len(docs), len(model.vocab))
    return 0


def _label_map_for(cfg: PipelineConfig, args, k: int) -> classify_mod.TopicLabelMap:
    path = getattr(args, "label_map", None) or cfg.label_map
    if path is not None:
        return datasets.read_label_map(Path(path))
    if k == len(classify_mod.DEFAULT_TOPIC_NAMES):
        return classify_mod.TopicLabelMap.default()
    raise ValueError(
        f"no label map configured and the default only covers "
        f"{len(classify_mod.DEFAULT_TOPIC_NAMES)} topics (model has {k})")


def cmd_classify(args) -> int:
    cfg = _load_config(args)
    _apply_seed_override(cfg, args)
    model = datasets.load_model(Path(args.model))
    rows = datasets.read_dataset(Path(args.dataset))
    flags = datasets.read_quality_flags(Path(args.flags))
    label_map = _label_map_for(cfg, args, model.config.n_topics)
    clean_flags = textstats.TextQualityFlags(0.0, 0.0, False, False, False)
    results = []
    for row in rows:
        theta_row = model.theta_row(row.sha256)
        if theta_row is None:
            tokens = row.method_words + row.xml_words + row.gui_words
            seed = topicmodel.derive_doc_seed(model.config.seed, row.sha256)
            theta_row = topicmodel.infer_theta(model, tokens, seed)
            if not any(t in model.vocab.token_to_id for t in tokens):
                log.warning("app %s shares no vocabulary with the model; "
                            "classified under the uniform prior", row.sha256)
            else:
                log.info("app %s not in the fitted model; folded in", row.sha256)
        assignment = topicmodel.TopicAssignment(
            app_id=row.sha256,
            contributions=topicmodel.top_topics(
                theta_row, cfg.topic_min_pct, cfg.topic_max_n),
        )
        app_flags = flags.get(row.sha256, clean_flags)
        anomaly, reasons = classify_mod.flag_anomaly(
            app_flags, theta_row, cfg.spread_threshold, cfg.spread_min_topics)
        results.append(classify_mod.ClassificationResult(
            app_id=row.sha256,
            assignment=assignment,
            category=classify_mod.assign_category(assignment, label_map),
            anomaly=anomaly,
            anomaly_reasons=reasons,
        ))
    datasets.write_classification(Path(args.out), results)
    log.info("classified %d apps", len(results))
    return 0


def cmd_similarity(args) -> int:
    cfg = _load_config(args)
    assignments = datasets.read_classification_assignments(Path(args.classification))
    reference_path = Path(args.reference) if args.reference else cfg.reference_labels
    if reference_path is None:
        raise ValueError("no reference labels: pass --reference or set "
                         "reference_labels in the config")
    reference = datasets.read_reference_labels(Path(reference_path))
    if args.label_map or cfg.label_map:
        label_map = datasets.read_label_map(Path(args.label_map or cfg.label_map))
    else:
        label_map = classify_mod.majority_label_map(assignments, reference)
    report = classify_mod.most_frequent_match_similarity(
        assignments, reference, label_map)
    datasets.write_similarity_report(Path(args.out), report)
    log.info("average similarity %.2f%% over %d topics",
             report.average, len(report.per_topic))
    return 0


def cmd_topicmap(args) -> int:
    _load_config(args)
    model = datasets.load_model(Path(args.model))
    entries = topicmodel.emit_topic_map(model)
    datasets.write_topic_map(Path(args.out), entries)
    log.info("wrote topic map for %d topics", len(entries))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="apptopics",
        description="Classify apps from package-internal text via topic modeling",
    )
    parser.add_argument("-v", "--verbose", action="store_true",
                        help="debug-level diagnostics on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("extract", help="scan decompiled app directories")
    p.add_argument("--config", help="pipeline config file")
    p.add_argument("--input-root", help="directory of <sha256>__<package_id> app dirs")
    p.add_argument("--out", required=True, help="raw dataset output (TSV)")
    p.add_argument("--flags-out", required=True, help="quality flags output (TSV)")
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("preprocess", help="clean a raw dataset")
    p.add_argument("--config", help="pipeline config file")
    p.add_argument("--dataset", required=True, help="raw dataset (TSV)")
    p.add_argument("--flags", required=True, help="quality flags (TSV)")
    p.add_argument("--out", required=True, help="clean dataset output (TSV)")
    p.add_argument("--report", required=True, help="removal report output (TSV)")
    p.add_argument("--no-prune", action="store_true",
                   help="disable support pruning (tiny corpora)")
    p.set_defaults(func=cmd_preprocess)

    p = sub.add_parser("fit", help="fit the topic model")
    p.add_argument("--config", help="pipeline config file")
    p.add_argument("--dataset", required=True, help="clean dataset (TSV)")
    p.add_argument("--model-out", required=True, help="model container output (JSON)")
    p.add_argument("--keys-out", required=True, help="topic keys output (TSV)")
    p.add_argument("--composition-out", required=True,
                   help="per-app topic composition output (TSV)")
    p.add_argument("--seed", type=int, help="override the configured seed")
    p.set_defaults(func=cmd_fit)

    p = sub.add_parser("classify", help="assign categories and anomaly flags")
    p.add_argument("--config", help="pipeline config file")
    p.add_argument("--model", required=True, help="model container (JSON)")
    p.add_argument("--dataset", required=True, help="clean dataset (TSV)")
    p.add_argument("--flags", required=True, help="quality flags (TSV)")
    p.add_argument("--label-map", help="topic label map (TSV); default map when omitted")
    p.add_argument("--out", required=True, help="classification output (TSV)")
    p.add_argument("--seed", type=int, help="override the configured seed")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("similarity", help="score against reference labels")
    p.add_argument("--config", help="pipeline config file")
    p.add_argument("--classification", required=True, help="classification output (TSV)")
    p.add_argument("--reference", help="reference labels (TSV)")
    p.add_argument("--label-map", help="fixed label map (TSV); majority map when omitted")
    p.add_argument("--out", required=True, help="similarity report output (TSV)")
    p.set_defaults(func=cmd_similarity)

    p = sub.add_parser("topicmap", help="emit per-topic plot data")
    p.add_argument("--config", help="pipeline config file")
    p.add_argument("--model", required=True, help="model container (JSON)")
    p.add_argument("--out", required=True, help="plot data output (JSON)")
    p.set_defaults(func=cmd_topicmap)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        stream=sys.stderr,
        level=logging.DEBUG if args.verbose else logging.INFO,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        return args.func(args)
    except Exception as exc:
        log.error("%s", exc)
        return 1


if __name__ == "__main__":
    sys.exit(main())
