"""Command-line surface binding the pipeline end to end.

Subcommands: clean, train, similar, eval, score, langstats. Exit codes:
0 success, 2 usage error, 3 data or format error, 4 out-of-vocabulary.
All output files are written atomically. HAUWE_SEED serves as the seed
fallback when --seed is not given.
"""

import argparse
import logging
import os
import sys

from . import corpus as corpus_mod
from . import lexicon as lexicon_mod
from . import similarity as similarity_mod
from . import store
from . import vocab as vocab_mod
from .errors import (
    EmptyCorpusError,
    FileFormatError,
    HauweError,
    MissingAnnotationError,
    OutOfVocabularyError,
    SamplingExhaustedError,
    ZeroVectorError,
)
from .training import Hyperparameters, train

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DATA = 3
EXIT_OOV = 4


def _default_seed() -> int:
    env = os.environ.get("HAUWE_SEED")
    return int(env) if env else 1


def _load_model(path):
    return store.load_text(path) if str(path).endswith(".vec") else store.load_binary(path)


def _save_model(model, path):
    if str(path).endswith(".vec"):
        store.save_text(model, path)
    else:
        store.save_binary(model, path)


def cmd_clean(args) -> int:
    docs = corpus_mod.read_documents(args.input)
    sentences, stats = corpus_mod.clean_corpus(docs)
    corpus_mod.write_corpus(sentences, args.output)
    stats_path = args.stats if args.stats else args.output + ".stats.json"
    corpus_mod.write_stats(stats, stats_path)
    print(corpus_mod.format_stats(stats))
    return EXIT_OK


def cmd_train(args) -> int:
    hyper = Hyperparameters(
        dim=args.dim, epochs=args.epochs, window=args.window,
        min_count=args.min_count, negatives=args.negatives,
        alpha0=args.alpha, alpha_min=args.min_alpha, sample=args.sample,
        workers=args.workers, seed=args.seed,
    )
    sentences = corpus_mod.read_corpus(args.corpus)
    vocabulary = vocab_mod.build_vocab(sentences, hyper.min_count)
    model, _ = train(sentences, vocabulary, hyper, args.mode)
    _save_model(model, args.out_model)
    return EXIT_OK


def cmd_similar(args) -> int:
    model = _load_model(args.model)
    for rank, (neighbor, score) in enumerate(similarity_mod.most_similar(model, args.word, args.k), start=1):
        print(f"{rank}\t{neighbor}\t{score:.6f}")
    return EXIT_OK


def cmd_eval(args) -> int:
    model = _load_model(args.model)
    if args.queries == "builtin30":
        queries = similarity_mod.DEFAULT_QUERY_WORDS
    else:
        with open(args.queries, encoding="utf-8") as handle:
            queries = [line.strip() for line in handle if line.strip()]
    report = similarity_mod.evaluate(model, queries, k=args.k, label=str(args.model))
    if args.out:
        similarity_mod.write_report(report, args.out)
    else:
        for query, neighbors in report.entries.items():
            for rank, (neighbor, score) in enumerate(neighbors, start=1):
                print(f"{query}\t{rank}\t{neighbor}\t{score:.9g}")
    missing = sum(1 for neighbors in report.entries.values() if not neighbors)
    print(f"queries={len(report.entries)} k={report.k} out_of_vocabulary={missing}",
          file=sys.stderr)
    return EXIT_OK


def cmd_score(args) -> int:
    report = similarity_mod.load_report(args.report)
    annotations = similarity_mod.load_annotations(args.annotations)
    accuracy, per_word = similarity_mod.score_annotations(report, annotations)
    for word, correct in per_word.items():
        print(f"{word}\t{correct}")
    print(f"accuracy={accuracy:.1%}")
    return EXIT_OK


def cmd_langstats(args) -> int:
    source = str(args.source)
    if source.endswith((".vec", ".bin")):
        vocabulary = _load_model(args.source).vocab
    else:
        vocabulary = vocab_mod.load_vocab(args.source)
    wordlist = lexicon_mod.load_wordlist(args.wordlist)
    if args.exclusions == "builtin":
        exclusions = lexicon_mod.BUILTIN_EXCLUSIONS
    else:
        exclusions = lexicon_mod.load_wordlist(args.exclusions)
    stats = lexicon_mod.vocabulary_composition(vocabulary, wordlist, exclusions)
    print(lexicon_mod.format_composition(stats))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hauwe",
        description="Hausa word embedding toolkit: clean, train, query, evaluate.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("clean", help="clean a raw text dump into a training corpus")
    p.add_argument("input", help="raw dump, UTF-8, one document per line")
    p.add_argument("output", help="cleaned corpus, one sentence per line")
    p.add_argument("--stats", help="stats JSON path (default: <output>.stats.json)")
    p.set_defaults(func=cmd_clean)

    p = sub.add_parser("train", help="train an embedding model on a cleaned corpus")
    p.add_argument("corpus", help="cleaned corpus file")
    p.add_argument("out_model", help="model path (.vec text, anything else binary)")
    p.add_argument("--mode", choices=("cbow", "sg"), default="cbow")
    p.add_argument("--dim", type=int, default=300)
    p.add_argument("--window", type=int, default=5)
    p.add_argument("--epochs", type=int, default=5)
    p.add_argument("--negatives", type=int, default=5)
    p.add_argument("--min-count", type=int, default=1)
    p.add_argument("--alpha", type=float, default=0.025)
    p.add_argument("--min-alpha", type=float, default=0.0001)
    p.add_argument("--sample", type=float, default=1e-3)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(func=cmd_train)

    p = sub.add_parser("similar", help="print the nearest neighbors of a word")
    p.add_argument("model")
    p.add_argument("word")
    p.add_argument("--k", type=int, default=10)
    p.set_defaults(func=cmd_similar)

    p = sub.add_parser("eval", help="rank neighbors for a query list into a report")
    p.add_argument("model")
    p.add_argument("--queries", default="builtin30",
                   help="query file (one word per line) or 'builtin30'")
    p.add_argument("--k", type=int, default=10)
    p.add_argument("--out", help="report path; prints to stdout when omitted")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("score", help="score a report against annotations")
    p.add_argument("report")
    p.add_argument("annotations", help="query<TAB>neighbor<TAB>0|1 lines")
    p.set_defaults(func=cmd_score)

    p = sub.add_parser("langstats", help="English/other composition of a vocabulary")
    p.add_argument("source", help="vocabulary TSV, or a .vec/.bin model")
    p.add_argument("wordlist", help="English reference wordlist, one word per line")
    p.add_argument("--exclusions", default="builtin",
                   help="exclusion wordlist file or 'builtin'")
    p.set_defaults(func=cmd_langstats)
    return parser


def main(argv=None) -> int:
    logging.basicConfig(level=logging.INFO, format="%(message)s", stream=sys.stderr)
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "seed", "absent") is None:
        try:
            args.seed = _default_seed()
        except ValueError:
            print("hauwe: HAUWE_SEED is not an integer", file=sys.stderr)
            return EXIT_USAGE
    try:
        return args.func(args)
    except OutOfVocabularyError as error:
        print(f"hauwe: {error}", file=sys.stderr)
        return EXIT_OOV
    except (FileFormatError, EmptyCorpusError, MissingAnnotationError,
            ZeroVectorError, SamplingExhaustedError) as error:
        print(f"hauwe: {error}", file=sys.stderr)
        return EXIT_DATA
    except OSError as error:
        print(f"hauwe: {error}", file=sys.stderr)
        return EXIT_DATA
    except UnicodeDecodeError as error:
        print(f"hauwe: {error}", file=sys.stderr)
        return EXIT_DATA
    except ValueError as error:
        print(f"hauwe: {error}", file=sys.stderr)
        return EXIT_USAGE
    except HauweError as error:
        print(f"hauwe: {error}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
