from .boosted_trees import (
    BoostConfig,
    BoostedTreesModel,
    RegressionTree,
    TreeNode,
    gbt_fit,
    gbt_predict,
    load_gbt,
    logistic_loss,
    save_gbt,
    sigmoid,
)
from .convnet import (
    AdamConfig,
    CNN_FORMAT,
    ConvNetModel,
    TrainConfig,
    bce_loss,
    cnn_forward,
    cnn_gradients,
    cnn_predict,
    cnn_train,
    grad_check,
    init_convnet,
    load_cnn,
    save_cnn,
)
from .embeddings import build_token_index, encode_corpus, encode_tokens, load_embeddings
from .naive_bayes import (
    NaiveBayesModel,
    load_nb,
    nb_fit,
    nb_joint_scores,
    nb_predict,
    save_nb,
)

__all__ = [
    "AdamConfig",
    "BoostConfig",
    "BoostedTreesModel",
    "CNN_FORMAT",
    "ConvNetModel",
    "NaiveBayesModel",
    "RegressionTree",
    "TrainConfig",
    "TreeNode",
    "bce_loss",
    "build_token_index",
    "cnn_forward",
    "cnn_gradients",
    "cnn_predict",
    "cnn_train",
    "encode_corpus",
    "encode_tokens",
    "gbt_fit",
    "gbt_predict",
    "grad_check",
    "init_convnet",
    "load_cnn",
    "load_embeddings",
    "load_gbt",
    "load_nb",
    "logistic_loss",
    "nb_fit",
    "nb_joint_scores",
    "nb_predict",
    "save_cnn",
    "save_gbt",
    "save_nb",
    "sigmoid",
]
