"""Shared fixtures: a tiny randomly initialized RoBERTa, built offline.

The exporter only needs a model directory that AutoTokenizer and
AutoModel can load; weights are random because the tests check the
export contract (shape, determinism, file format), not embedding
quality. Nothing here touches the network.
"""

import os

os.environ.setdefault("HF_HUB_OFFLINE", "1")
os.environ.setdefault("TRANSFORMERS_OFFLINE", "1")
os.environ.setdefault("TOKENIZERS_PARALLELISM", "false")

import pytest
import tokenizers
import torch
from transformers import RobertaConfig, RobertaModel, RobertaTokenizer


@pytest.fixture(scope="session")
def tiny_model_dir(tmp_path_factory):
    path = tmp_path_factory.mktemp("tiny-roberta")
    specials = ["<s>", "<pad>", "</s>", "<unk>", "<mask>"]
    alphabet = sorted(tokenizers.pre_tokenizers.ByteLevel.alphabet())
    vocab = {token: index for index, token in enumerate(specials + alphabet)}
    tokenizer = RobertaTokenizer(vocab=vocab, merges=[])
    tokenizer.save_pretrained(path)

    config = RobertaConfig(
        vocab_size=len(vocab),
        hidden_size=16,
        num_hidden_layers=1,
        num_attention_heads=2,
        intermediate_size=32,
        max_position_embeddings=130,
        type_vocab_size=1,
    )
    torch.manual_seed(1234)
    RobertaModel(config).save_pretrained(path)
    return str(path)


@pytest.fixture
def sample_tsv(tmp_path):
    rows = [
        ("t01", "Confirmed: 523 new cases in the region today", "INFORMATIVE"),
        ("t02", "the coronavirus spreads fast", "INFORMATIVE"),
        ("t03", "miss my friends so much", "UNINFORMATIVE"),
        ("t04", "hospital reports 12 admissions", "INFORMATIVE"),
        ("t05", "what a sunny weekend", "UNINFORMATIVE"),
        ("t06", "toll rises to 48", "INFORMATIVE"),
        ("t07", "coffee first, always", "UNINFORMATIVE"),
        ("t08", "lockdown extended until May 4", "INFORMATIVE"),
        ("t09", "my dog is a very good boy", "UNINFORMATIVE"),
        ("t10", "officials urge testing in 3 districts", "INFORMATIVE"),
    ]
    path = tmp_path / "tweets.tsv"
    path.write_text(
        "Id\tText\tLabel\n"
        + "".join(f"{i}\t{t}\t{label}\n" for i, t, label in rows),
        "utf-8",
    )
    return path
