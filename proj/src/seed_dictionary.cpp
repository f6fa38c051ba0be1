#include "dspipe/dictionary.hpp"

namespace dspipe {

// Built-in API-to-stage mapping for the library families common in
// data-science programs (pandas, numpy, scikit-learn, keras/tensorflow,
// torch, plotting stacks). Each entry notes where its stage assignment
// comes from: the library's own documentation grouping or the typical
// usage context. Entries mapped to GEN are the documented generic list:
// recognized calls that perform no pipeline stage.
const std::string& seed_dictionary_json() {
    static const std::string text = R"JSON({
  "version": 1,
  "entries": [
    {"pattern": "pandas.read_csv", "match": "exact", "stage": "ACQ", "note": "pandas IO: reads data from disk"},
    {"pattern": "pandas.read_table", "match": "exact", "stage": "ACQ", "note": "pandas IO"},
    {"pattern": "pandas.read_excel", "match": "exact", "stage": "ACQ", "note": "pandas IO"},
    {"pattern": "pandas.read_json", "match": "exact", "stage": "ACQ", "note": "pandas IO"},
    {"pattern": "pandas.read_html", "match": "exact", "stage": "ACQ", "note": "pandas IO"},
    {"pattern": "pandas.read_pickle", "match": "exact", "stage": "ACQ", "note": "pandas IO"},
    {"pattern": "pandas.read_parquet", "match": "exact", "stage": "ACQ", "note": "pandas IO"},
    {"pattern": "pandas.read_feather", "match": "exact", "stage": "ACQ", "note": "pandas IO"},
    {"pattern": "pandas.read_hdf", "match": "exact", "stage": "ACQ", "note": "pandas IO"},
    {"pattern": "pandas.read_sql", "match": "exact", "stage": "ACQ", "note": "pandas IO"},
    {"pattern": "pandas.read_sql_query", "match": "exact", "stage": "ACQ", "note": "pandas IO"},
    {"pattern": "pandas.read_sql_table", "match": "exact", "stage": "ACQ", "note": "pandas IO"},
    {"pattern": "pandas.read_fwf", "match": "exact", "stage": "ACQ", "note": "pandas IO"},
    {"pattern": "read_csv", "match": "method-suffix", "stage": "ACQ", "note": "pandas IO under star imports / unresolved receivers"},
    {"pattern": "read_excel", "match": "method-suffix", "stage": "ACQ", "note": "pandas IO under star imports"},
    {"pattern": "read_json", "match": "method-suffix", "stage": "ACQ", "note": "pandas IO under star imports"},
    {"pattern": "pandas.DataFrame", "match": "exact", "stage": "PRP", "note": "shaping raw data into frames"},
    {"pattern": "pandas.Series", "match": "exact", "stage": "PRP", "note": "shaping raw data"},
    {"pattern": "pandas.concat", "match": "exact", "stage": "PRP", "note": "pandas reshaping docs"},
    {"pattern": "pandas.merge", "match": "exact", "stage": "PRP", "note": "pandas reshaping docs"},
    {"pattern": "pandas.pivot_table", "match": "exact", "stage": "PRP", "note": "pandas reshaping docs"},
    {"pattern": "pandas.to_datetime", "match": "exact", "stage": "PRP", "note": "type coercion"},
    {"pattern": "pandas.to_numeric", "match": "exact", "stage": "PRP", "note": "type coercion"},
    {"pattern": "pandas.cut", "match": "exact", "stage": "PRP", "note": "binning"},
    {"pattern": "pandas.qcut", "match": "exact", "stage": "PRP", "note": "binning"},
    {"pattern": "pandas.factorize", "match": "exact", "stage": "PRP", "note": "categorical encoding"},
    {"pattern": "pandas.get_dummies", "match": "exact", "stage": "FTR", "note": "constructs indicator features"},
    {"pattern": "get_dummies", "match": "method-suffix", "stage": "FTR", "note": "indicator features under star imports"},
    {"pattern": "pandas.set_option", "match": "exact", "stage": "LIB", "note": "session configuration at import time"},
    {"pattern": "pandas", "match": "root-prefix", "stage": "PRP", "note": "fallback: remaining pandas namespace is data manipulation"},
    {"pattern": "dropna", "match": "method-suffix", "stage": "PRP", "note": "DataFrame cleaning method"},
    {"pattern": "fillna", "match": "method-suffix", "stage": "PRP", "note": "DataFrame cleaning method"},
    {"pattern": "drop", "match": "method-suffix", "stage": "PRP", "note": "DataFrame cleaning method"},
    {"pattern": "drop_duplicates", "match": "method-suffix", "stage": "PRP", "note": "DataFrame cleaning method"},
    {"pattern": "merge", "match": "method-suffix", "stage": "PRP", "note": "DataFrame combination method"},
    {"pattern": "concat", "match": "method-suffix", "stage": "PRP", "note": "combination under star imports"},
    {"pattern": "astype", "match": "method-suffix", "stage": "PRP", "note": "type coercion method"},
    {"pattern": "rename", "match": "method-suffix", "stage": "PRP", "note": "DataFrame formatting method"},
    {"pattern": "replace", "match": "method-suffix", "stage": "PRP", "note": "value cleaning method"},
    {"pattern": "sort_values", "match": "method-suffix", "stage": "PRP", "note": "DataFrame ordering method"},
    {"pattern": "reset_index", "match": "method-suffix", "stage": "PRP", "note": "DataFrame formatting method"},
    {"pattern": "set_index", "match": "method-suffix", "stage": "PRP", "note": "DataFrame formatting method"},
    {"pattern": "groupby", "match": "method-suffix", "stage": "PRP", "note": "DataFrame aggregation method"},
    {"pattern": "apply", "match": "method-suffix", "stage": "PRP", "note": "row/column transformation method"},
    {"pattern": "map", "match": "method-suffix", "stage": "PRP", "note": "value transformation method"},
    {"pattern": "melt", "match": "method-suffix", "stage": "PRP", "note": "DataFrame reshaping method"},
    {"pattern": "pivot", "match": "method-suffix", "stage": "PRP", "note": "DataFrame reshaping method"},
    {"pattern": "stack", "match": "method-suffix", "stage": "PRP", "note": "reshaping method"},
    {"pattern": "unstack", "match": "method-suffix", "stage": "PRP", "note": "reshaping method"},
    {"pattern": "interpolate", "match": "method-suffix", "stage": "PRP", "note": "imputation method"},
    {"pattern": "clip", "match": "method-suffix", "stage": "PRP", "note": "value bounding method"},
    {"pattern": "sample", "match": "method-suffix", "stage": "PRP", "note": "data sampling method"},
    {"pattern": "describe", "match": "method-suffix", "stage": "EDA", "note": "data inspection method"},
    {"pattern": "info", "match": "method-suffix", "stage": "EDA", "note": "data inspection method"},
    {"pattern": "head", "match": "method-suffix", "stage": "EDA", "note": "data inspection method"},
    {"pattern": "tail", "match": "method-suffix", "stage": "EDA", "note": "data inspection method"},
    {"pattern": "value_counts", "match": "method-suffix", "stage": "EDA", "note": "data inspection method"},
    {"pattern": "corr", "match": "method-suffix", "stage": "EDA", "note": "correlation exploration"},
    {"pattern": "nunique", "match": "method-suffix", "stage": "EDA", "note": "cardinality exploration"},
    {"pattern": "isnull", "match": "method-suffix", "stage": "EDA", "note": "missingness inspection"},
    {"pattern": "isna", "match": "method-suffix", "stage": "EDA", "note": "missingness inspection"},
    {"pattern": "to_csv", "match": "method-suffix", "stage": "STR", "note": "persists data to disk"},
    {"pattern": "to_pickle", "match": "method-suffix", "stage": "STR", "note": "persists data to disk"},
    {"pattern": "to_hdf", "match": "method-suffix", "stage": "STR", "note": "persists data to disk"},
    {"pattern": "to_sql", "match": "method-suffix", "stage": "STR", "note": "persists data to a database"},
    {"pattern": "to_parquet", "match": "method-suffix", "stage": "STR", "note": "persists data to disk"},
    {"pattern": "to_excel", "match": "method-suffix", "stage": "STR", "note": "persists data to disk"},

    {"pattern": "numpy.loadtxt", "match": "exact", "stage": "ACQ", "note": "numpy IO"},
    {"pattern": "numpy.genfromtxt", "match": "exact", "stage": "ACQ", "note": "numpy IO"},
    {"pattern": "numpy.load", "match": "exact", "stage": "ACQ", "note": "numpy IO"},
    {"pattern": "numpy.save", "match": "exact", "stage": "STR", "note": "numpy IO"},
    {"pattern": "numpy.savetxt", "match": "exact", "stage": "STR", "note": "numpy IO"},
    {"pattern": "numpy.savez", "match": "exact", "stage": "STR", "note": "numpy IO"},
    {"pattern": "numpy.random.seed", "match": "exact", "stage": "LIB", "note": "run setup"},
    {"pattern": "numpy.mean", "match": "exact", "stage": "GEN", "note": "generic: scalar math utility"},
    {"pattern": "numpy.sum", "match": "exact", "stage": "GEN", "note": "generic: scalar math utility"},
    {"pattern": "numpy.min", "match": "exact", "stage": "GEN", "note": "generic: scalar math utility"},
    {"pattern": "numpy.max", "match": "exact", "stage": "GEN", "note": "generic: scalar math utility"},
    {"pattern": "numpy.abs", "match": "exact", "stage": "GEN", "note": "generic: scalar math utility"},
    {"pattern": "numpy.sqrt", "match": "exact", "stage": "GEN", "note": "generic: scalar math utility"},
    {"pattern": "numpy.log", "match": "exact", "stage": "GEN", "note": "generic: scalar math utility"},
    {"pattern": "numpy.exp", "match": "exact", "stage": "GEN", "note": "generic: scalar math utility"},
    {"pattern": "numpy.argmax", "match": "exact", "stage": "GEN", "note": "generic: index utility"},
    {"pattern": "numpy.argmin", "match": "exact", "stage": "GEN", "note": "generic: index utility"},
    {"pattern": "numpy.arange", "match": "exact", "stage": "GEN", "note": "generic: array constructor utility"},
    {"pattern": "numpy.linspace", "match": "exact", "stage": "GEN", "note": "generic: array constructor utility"},
    {"pattern": "numpy.zeros", "match": "exact", "stage": "GEN", "note": "generic: array constructor utility"},
    {"pattern": "numpy.ones", "match": "exact", "stage": "GEN", "note": "generic: array constructor utility"},
    {"pattern": "numpy", "match": "root-prefix", "stage": "PRP", "note": "fallback: array manipulation (reshape, stack, cast)"},
    {"pattern": "reshape", "match": "method-suffix", "stage": "PRP", "note": "reshaping is data preparation"},
    {"pattern": "transpose", "match": "method-suffix", "stage": "PRP", "note": "array reshaping method"},
    {"pattern": "flatten", "match": "method-suffix", "stage": "PRP", "note": "array reshaping method"},
    {"pattern": "squeeze", "match": "method-suffix", "stage": "PRP", "note": "array reshaping method"},

    {"pattern": "sklearn.datasets", "match": "root-prefix", "stage": "ACQ", "note": "sklearn dataset loaders group"},
    {"pattern": "sklearn.preprocessing", "match": "root-prefix", "stage": "PRP", "note": "sklearn preprocessing group (scalers, encoders)"},
    {"pattern": "sklearn.impute", "match": "root-prefix", "stage": "PRP", "note": "sklearn imputation group"},
    {"pattern": "sklearn.model_selection", "match": "root-prefix", "stage": "PRP", "note": "data splitting helpers; search/score overridden below"},
    {"pattern": "sklearn.model_selection.train_test_split", "match": "exact", "stage": "PRP", "note": "data splitting"},
    {"pattern": "sklearn.model_selection.cross_val_score", "match": "exact", "stage": "EVL", "note": "cross-validated scoring"},
    {"pattern": "sklearn.model_selection.cross_validate", "match": "exact", "stage": "EVL", "note": "cross-validated scoring"},
    {"pattern": "sklearn.model_selection.GridSearchCV", "match": "exact", "stage": "MDL", "note": "model selection"},
    {"pattern": "sklearn.model_selection.RandomizedSearchCV", "match": "exact", "stage": "MDL", "note": "model selection"},
    {"pattern": "sklearn.feature_extraction", "match": "root-prefix", "stage": "FTR", "note": "sklearn feature extraction group"},
    {"pattern": "sklearn.feature_selection", "match": "root-prefix", "stage": "FTR", "note": "sklearn feature selection group"},
    {"pattern": "sklearn.decomposition", "match": "root-prefix", "stage": "FTR", "note": "dimensionality reduction builds features"},
    {"pattern": "sklearn.ensemble", "match": "root-prefix", "stage": "MDL", "note": "estimator constructor group"},
    {"pattern": "sklearn.linear_model", "match": "root-prefix", "stage": "MDL", "note": "estimator constructor group"},
    {"pattern": "sklearn.tree", "match": "root-prefix", "stage": "MDL", "note": "estimator constructor group"},
    {"pattern": "sklearn.svm", "match": "root-prefix", "stage": "MDL", "note": "estimator constructor group"},
    {"pattern": "sklearn.neighbors", "match": "root-prefix", "stage": "MDL", "note": "estimator constructor group"},
    {"pattern": "sklearn.naive_bayes", "match": "root-prefix", "stage": "MDL", "note": "estimator constructor group"},
    {"pattern": "sklearn.cluster", "match": "root-prefix", "stage": "MDL", "note": "estimator constructor group"},
    {"pattern": "sklearn.neural_network", "match": "root-prefix", "stage": "MDL", "note": "estimator constructor group"},
    {"pattern": "sklearn.discriminant_analysis", "match": "root-prefix", "stage": "MDL", "note": "estimator constructor group"},
    {"pattern": "sklearn.gaussian_process", "match": "root-prefix", "stage": "MDL", "note": "estimator constructor group"},
    {"pattern": "sklearn.mixture", "match": "root-prefix", "stage": "MDL", "note": "estimator constructor group"},
    {"pattern": "sklearn.pipeline", "match": "root-prefix", "stage": "MDL", "note": "composite model assembly"},
    {"pattern": "sklearn.metrics", "match": "root-prefix", "stage": "EVL", "note": "sklearn metrics group"},

    {"pattern": "StandardScaler", "match": "method-suffix", "stage": "PRP", "note": "scaler constructor under star imports"},
    {"pattern": "MinMaxScaler", "match": "method-suffix", "stage": "PRP", "note": "scaler constructor under star imports"},
    {"pattern": "RobustScaler", "match": "method-suffix", "stage": "PRP", "note": "scaler constructor under star imports"},
    {"pattern": "LabelEncoder", "match": "method-suffix", "stage": "PRP", "note": "encoder constructor under star imports"},
    {"pattern": "OneHotEncoder", "match": "method-suffix", "stage": "PRP", "note": "encoder constructor under star imports"},
    {"pattern": "SimpleImputer", "match": "method-suffix", "stage": "PRP", "note": "imputer constructor under star imports"},
    {"pattern": "train_test_split", "match": "method-suffix", "stage": "PRP", "note": "data splitting under star imports"},
    {"pattern": "TfidfVectorizer", "match": "method-suffix", "stage": "FTR", "note": "text feature constructor"},
    {"pattern": "CountVectorizer", "match": "method-suffix", "stage": "FTR", "note": "text feature constructor"},
    {"pattern": "PCA", "match": "method-suffix", "stage": "FTR", "note": "dimensionality reduction constructor"},
    {"pattern": "SelectKBest", "match": "method-suffix", "stage": "FTR", "note": "feature selection constructor"},
    {"pattern": "LogisticRegression", "match": "method-suffix", "stage": "MDL", "note": "built-in ML algorithm constructor"},
    {"pattern": "LinearRegression", "match": "method-suffix", "stage": "MDL", "note": "built-in ML algorithm constructor"},
    {"pattern": "RandomForestClassifier", "match": "method-suffix", "stage": "MDL", "note": "built-in ML algorithm constructor"},
    {"pattern": "RandomForestRegressor", "match": "method-suffix", "stage": "MDL", "note": "built-in ML algorithm constructor"},
    {"pattern": "GradientBoostingClassifier", "match": "method-suffix", "stage": "MDL", "note": "built-in ML algorithm constructor"},
    {"pattern": "DecisionTreeClassifier", "match": "method-suffix", "stage": "MDL", "note": "built-in ML algorithm constructor"},
    {"pattern": "KNeighborsClassifier", "match": "method-suffix", "stage": "MDL", "note": "built-in ML algorithm constructor"},
    {"pattern": "SVC", "match": "method-suffix", "stage": "MDL", "note": "built-in ML algorithm constructor"},
    {"pattern": "KMeans", "match": "method-suffix", "stage": "MDL", "note": "built-in ML algorithm constructor"},
    {"pattern": "MLPClassifier", "match": "method-suffix", "stage": "MDL", "note": "built-in ML algorithm constructor"},
    {"pattern": "GaussianNB", "match": "method-suffix", "stage": "MDL", "note": "built-in ML algorithm constructor"},
    {"pattern": "Ridge", "match": "method-suffix", "stage": "MDL", "note": "built-in ML algorithm constructor"},
    {"pattern": "Lasso", "match": "method-suffix", "stage": "MDL", "note": "built-in ML algorithm constructor"},
    {"pattern": "XGBClassifier", "match": "method-suffix", "stage": "MDL", "note": "built-in ML algorithm constructor"},
    {"pattern": "XGBRegressor", "match": "method-suffix", "stage": "MDL", "note": "built-in ML algorithm constructor"},
    {"pattern": "LGBMClassifier", "match": "method-suffix", "stage": "MDL", "note": "built-in ML algorithm constructor"},
    {"pattern": "GridSearchCV", "match": "method-suffix", "stage": "MDL", "note": "model selection under star imports"},
    {"pattern": "accuracy_score", "match": "method-suffix", "stage": "EVL", "note": "metric under star imports"},
    {"pattern": "f1_score", "match": "method-suffix", "stage": "EVL", "note": "metric under star imports"},
    {"pattern": "roc_auc_score", "match": "method-suffix", "stage": "EVL", "note": "metric under star imports"},
    {"pattern": "mean_squared_error", "match": "method-suffix", "stage": "EVL", "note": "metric under star imports"},
    {"pattern": "log_loss", "match": "method-suffix", "stage": "EVL", "note": "metric under star imports"},
    {"pattern": "confusion_matrix", "match": "method-suffix", "stage": "EVL", "note": "metric under star imports"},
    {"pattern": "classification_report", "match": "method-suffix", "stage": "EVL", "note": "metric under star imports"},
    {"pattern": "cross_val_score", "match": "method-suffix", "stage": "EVL", "note": "cross-validated scoring under star imports"},

    {"pattern": "keras.datasets", "match": "root-prefix", "stage": "ACQ", "note": "keras dataset loaders group"},
    {"pattern": "tensorflow.keras.datasets", "match": "root-prefix", "stage": "ACQ", "note": "keras dataset loaders group"},
    {"pattern": "keras.preprocessing", "match": "root-prefix", "stage": "PRP", "note": "keras preprocessing group"},
    {"pattern": "tensorflow.keras.preprocessing", "match": "root-prefix", "stage": "PRP", "note": "keras preprocessing group"},
    {"pattern": "keras.utils.to_categorical", "match": "exact", "stage": "PRP", "note": "label encoding"},
    {"pattern": "tensorflow.keras.utils.to_categorical", "match": "exact", "stage": "PRP", "note": "label encoding"},
    {"pattern": "to_categorical", "match": "method-suffix", "stage": "PRP", "note": "label encoding under star imports"},
    {"pattern": "keras.layers", "match": "root-prefix", "stage": "MDL", "note": "layer constructor group"},
    {"pattern": "tensorflow.keras.layers", "match": "root-prefix", "stage": "MDL", "note": "layer constructor group"},
    {"pattern": "keras.layers.Reshape", "match": "exact", "stage": "PRP", "note": "keras reshaping-layer group; reshaping is data preparation"},
    {"pattern": "keras.layers.Flatten", "match": "exact", "stage": "PRP", "note": "keras reshaping-layer group"},
    {"pattern": "tensorflow.keras.layers.Reshape", "match": "exact", "stage": "PRP", "note": "keras reshaping-layer group"},
    {"pattern": "tensorflow.keras.layers.Flatten", "match": "exact", "stage": "PRP", "note": "keras reshaping-layer group"},
    {"pattern": "Reshape", "match": "method-suffix", "stage": "PRP", "note": "reshaping layer under star imports"},
    {"pattern": "Flatten", "match": "method-suffix", "stage": "PRP", "note": "reshaping layer under star imports"},
    {"pattern": "keras.models", "match": "root-prefix", "stage": "MDL", "note": "model constructor group"},
    {"pattern": "tensorflow.keras.models", "match": "root-prefix", "stage": "MDL", "note": "model constructor group"},
    {"pattern": "keras.models.load_model", "match": "exact", "stage": "MDL", "note": "artifact loading: puts a built model in hand"},
    {"pattern": "tensorflow.keras.models.load_model", "match": "exact", "stage": "MDL", "note": "artifact loading"},
    {"pattern": "keras", "match": "root-prefix", "stage": "MDL", "note": "fallback: keras namespace builds models"},
    {"pattern": "Sequential", "match": "method-suffix", "stage": "MDL", "note": "model constructor under star imports"},
    {"pattern": "Model", "match": "method-suffix", "stage": "MDL", "note": "model constructor under star imports"},
    {"pattern": "Input", "match": "method-suffix", "stage": "MDL", "note": "graph input constructor under star imports"},
    {"pattern": "Dense", "match": "method-suffix", "stage": "MDL", "note": "layer constructor under star imports"},
    {"pattern": "Conv1D", "match": "method-suffix", "stage": "MDL", "note": "layer constructor under star imports"},
    {"pattern": "Conv2D", "match": "method-suffix", "stage": "MDL", "note": "layer constructor under star imports"},
    {"pattern": "LSTM", "match": "method-suffix", "stage": "MDL", "note": "layer constructor under star imports"},
    {"pattern": "GRU", "match": "method-suffix", "stage": "MDL", "note": "layer constructor under star imports"},
    {"pattern": "Embedding", "match": "method-suffix", "stage": "MDL", "note": "layer constructor under star imports"},
    {"pattern": "Dropout", "match": "method-suffix", "stage": "MDL", "note": "layer constructor under star imports"},
    {"pattern": "MaxPooling2D", "match": "method-suffix", "stage": "MDL", "note": "layer constructor under star imports"},
    {"pattern": "BatchNormalization", "match": "method-suffix", "stage": "MDL", "note": "layer constructor under star imports"},
    {"pattern": "Activation", "match": "method-suffix", "stage": "MDL", "note": "layer constructor under star imports"},
    {"pattern": "add", "match": "method-suffix", "stage": "MDL", "note": "sequential-model layer assembly"},
    {"pattern": "compile", "match": "method-suffix", "stage": "MDL", "note": "configures the built model"},
    {"pattern": "tensorflow.reshape", "match": "exact", "stage": "PRP", "note": "tensor reshaping"},
    {"pattern": "tensorflow.concat", "match": "exact", "stage": "PRP", "note": "tensor combination"},
    {"pattern": "tensorflow.cast", "match": "exact", "stage": "PRP", "note": "type coercion"},
    {"pattern": "tensorflow.expand_dims", "match": "exact", "stage": "PRP", "note": "tensor reshaping"},
    {"pattern": "tensorflow.squeeze", "match": "exact", "stage": "PRP", "note": "tensor reshaping"},
    {"pattern": "tensorflow.random.set_seed", "match": "exact", "stage": "LIB", "note": "run setup"},
    {"pattern": "tensorflow.train", "match": "root-prefix", "stage": "TRN", "note": "optimizers and training loops"},
    {"pattern": "tensorflow.train.Saver", "match": "exact", "stage": "STR", "note": "model artifact persistence"},
    {"pattern": "tensorflow", "match": "root-prefix", "stage": "MDL", "note": "fallback: graph construction"},
    {"pattern": "fit", "match": "method-suffix", "stage": "TRN", "note": "estimator training method"},
    {"pattern": "fit_generator", "match": "method-suffix", "stage": "TRN", "note": "keras training method"},
    {"pattern": "partial_fit", "match": "method-suffix", "stage": "TRN", "note": "incremental training method"},
    {"pattern": "train_on_batch", "match": "method-suffix", "stage": "TRN", "note": "keras training method"},
    {"pattern": "fit_transform", "match": "method-suffix", "stage": "PRP", "note": "transformer application"},
    {"pattern": "transform", "match": "method-suffix", "stage": "PRP", "note": "transformer application"},
    {"pattern": "inverse_transform", "match": "method-suffix", "stage": "PRP", "note": "transformer application"},
    {"pattern": "evaluate", "match": "method-suffix", "stage": "EVL", "note": "keras evaluation method"},
    {"pattern": "score", "match": "method-suffix", "stage": "EVL", "note": "estimator scoring method"},
    {"pattern": "predict", "match": "method-suffix", "stage": "PRD", "note": "estimator prediction method"},
    {"pattern": "predict_proba", "match": "method-suffix", "stage": "PRD", "note": "estimator prediction method"},
    {"pattern": "predict_classes", "match": "method-suffix", "stage": "PRD", "note": "keras prediction method"},
    {"pattern": "load_model", "match": "method-suffix", "stage": "MDL", "note": "artifact loading"},
    {"pattern": "load_weights", "match": "method-suffix", "stage": "MDL", "note": "artifact loading"},
    {"pattern": "restore", "match": "method-suffix", "stage": "MDL", "note": "artifact loading (checkpoint restore)"},
    {"pattern": "from_pretrained", "match": "method-suffix", "stage": "MDL", "note": "artifact loading (pretrained weights)"},
    {"pattern": "save_model", "match": "method-suffix", "stage": "STR", "note": "model artifact persistence"},
    {"pattern": "save_weights", "match": "method-suffix", "stage": "STR", "note": "model artifact persistence"},

    {"pattern": "xgboost.train", "match": "exact", "stage": "TRN", "note": "xgboost training entry"},
    {"pattern": "xgboost.plot_importance", "match": "exact", "stage": "INT", "note": "interpreting model drivers"},
    {"pattern": "xgboost", "match": "root-prefix", "stage": "MDL", "note": "booster constructors"},
    {"pattern": "lightgbm.train", "match": "exact", "stage": "TRN", "note": "lightgbm training entry"},
    {"pattern": "lightgbm", "match": "root-prefix", "stage": "MDL", "note": "booster constructors"},
    {"pattern": "catboost", "match": "root-prefix", "stage": "MDL", "note": "booster constructors"},
    {"pattern": "statsmodels", "match": "root-prefix", "stage": "MDL", "note": "statistical model constructors"},
    {"pattern": "scipy.stats", "match": "root-prefix", "stage": "EDA", "note": "statistical exploration"},

    {"pattern": "torch.nn", "match": "root-prefix", "stage": "MDL", "note": "layer constructor group"},
    {"pattern": "torch.optim", "match": "root-prefix", "stage": "TRN", "note": "optimizer group"},
    {"pattern": "torch.load", "match": "exact", "stage": "MDL", "note": "artifact loading"},
    {"pattern": "torch.save", "match": "exact", "stage": "STR", "note": "model artifact persistence"},
    {"pattern": "torch.manual_seed", "match": "exact", "stage": "LIB", "note": "run setup"},
    {"pattern": "torch.utils.data", "match": "root-prefix", "stage": "PRP", "note": "batching and dataset wrappers"},
    {"pattern": "torchvision.datasets", "match": "root-prefix", "stage": "ACQ", "note": "dataset loaders"},
    {"pattern": "torchvision.transforms", "match": "root-prefix", "stage": "PRP", "note": "input transforms"},
    {"pattern": "backward", "match": "method-suffix", "stage": "TRN", "note": "gradient computation in training loops"},
    {"pattern": "zero_grad", "match": "method-suffix", "stage": "TRN", "note": "training-loop bookkeeping"},

    {"pattern": "matplotlib.use", "match": "exact", "stage": "LIB", "note": "backend setup at import time"},
    {"pattern": "matplotlib", "match": "root-prefix", "stage": "VIS", "note": "plotting namespace"},
    {"pattern": "seaborn.set", "match": "exact", "stage": "LIB", "note": "style setup at import time"},
    {"pattern": "seaborn.set_style", "match": "exact", "stage": "LIB", "note": "style setup at import time"},
    {"pattern": "seaborn.set_context", "match": "exact", "stage": "LIB", "note": "style setup at import time"},
    {"pattern": "seaborn.set_palette", "match": "exact", "stage": "LIB", "note": "style setup at import time"},
    {"pattern": "seaborn", "match": "root-prefix", "stage": "VIS", "note": "plotting namespace"},
    {"pattern": "plotly", "match": "root-prefix", "stage": "VIS", "note": "plotting namespace"},
    {"pattern": "bokeh", "match": "root-prefix", "stage": "VIS", "note": "plotting namespace"},
    {"pattern": "plot", "match": "method-suffix", "stage": "VIS", "note": "plotting method"},
    {"pattern": "hist", "match": "method-suffix", "stage": "VIS", "note": "plotting method"},
    {"pattern": "scatter", "match": "method-suffix", "stage": "VIS", "note": "plotting method"},
    {"pattern": "imshow", "match": "method-suffix", "stage": "VIS", "note": "plotting method"},
    {"pattern": "heatmap", "match": "method-suffix", "stage": "VIS", "note": "plotting method"},
    {"pattern": "barplot", "match": "method-suffix", "stage": "VIS", "note": "plotting method"},
    {"pattern": "boxplot", "match": "method-suffix", "stage": "VIS", "note": "plotting method"},
    {"pattern": "countplot", "match": "method-suffix", "stage": "VIS", "note": "plotting method"},
    {"pattern": "pairplot", "match": "method-suffix", "stage": "VIS", "note": "plotting method"},
    {"pattern": "distplot", "match": "method-suffix", "stage": "VIS", "note": "plotting method"},
    {"pattern": "show", "match": "method-suffix", "stage": "VIS", "note": "figure display method"},

    {"pattern": "warnings.filterwarnings", "match": "exact", "stage": "LIB", "note": "session setup at import time"},
    {"pattern": "random.seed", "match": "exact", "stage": "LIB", "note": "run setup"},
    {"pattern": "sys.path.append", "match": "exact", "stage": "LIB", "note": "environment setup"},

    {"pattern": "urllib.request.urlretrieve", "match": "exact", "stage": "ACQ", "note": "data download"},
    {"pattern": "requests", "match": "root-prefix", "stage": "ACQ", "note": "HTTP data download in DS programs"},
    {"pattern": "zipfile.ZipFile", "match": "exact", "stage": "ACQ", "note": "unpacking downloaded datasets"},
    {"pattern": "json.load", "match": "exact", "stage": "ACQ", "note": "reading data files"},
    {"pattern": "pickle.load", "match": "exact", "stage": "ACQ", "note": "reading serialized data"},
    {"pattern": "pickle.dump", "match": "exact", "stage": "STR", "note": "persisting serialized data"},
    {"pattern": "joblib.load", "match": "exact", "stage": "MDL", "note": "artifact loading"},
    {"pattern": "joblib.dump", "match": "exact", "stage": "STR", "note": "model artifact persistence"},
    {"pattern": "h5py.File", "match": "exact", "stage": "ACQ", "note": "reading HDF5 data"},

    {"pattern": "shap", "match": "root-prefix", "stage": "INT", "note": "model interpretation package"},
    {"pattern": "lime", "match": "root-prefix", "stage": "INT", "note": "model interpretation package"},
    {"pattern": "eli5", "match": "root-prefix", "stage": "INT", "note": "model interpretation package"},

    {"pattern": "smtplib", "match": "root-prefix", "stage": "CMN", "note": "result sharing via mail"},
    {"pattern": "kafka", "match": "root-prefix", "stage": "CMN", "note": "message-bus communication"},
    {"pattern": "mpi4py", "match": "root-prefix", "stage": "CMN", "note": "inter-process communication"},

    {"pattern": "flask", "match": "root-prefix", "stage": "DPL", "note": "serving the solution"},
    {"pattern": "fastapi", "match": "root-prefix", "stage": "DPL", "note": "serving the solution"},
    {"pattern": "uvicorn.run", "match": "exact", "stage": "DPL", "note": "serving the solution"},
    {"pattern": "streamlit", "match": "root-prefix", "stage": "DPL", "note": "serving the solution"},
    {"pattern": "gradio", "match": "root-prefix", "stage": "DPL", "note": "serving the solution"},

    {"pattern": "summary", "match": "method-suffix", "stage": "GEN", "note": "generic: prints model parameters, represents no stage"},
    {"pattern": "print", "match": "exact", "stage": "GEN", "note": "generic: console output"},
    {"pattern": "len", "match": "exact", "stage": "GEN", "note": "generic: builtin utility"},
    {"pattern": "range", "match": "exact", "stage": "GEN", "note": "generic: builtin utility"},
    {"pattern": "enumerate", "match": "exact", "stage": "GEN", "note": "generic: builtin utility"},
    {"pattern": "zip", "match": "exact", "stage": "GEN", "note": "generic: builtin utility"},
    {"pattern": "list", "match": "exact", "stage": "GEN", "note": "generic: builtin constructor"},
    {"pattern": "dict", "match": "exact", "stage": "GEN", "note": "generic: builtin constructor"},
    {"pattern": "set", "match": "exact", "stage": "GEN", "note": "generic: builtin constructor"},
    {"pattern": "tuple", "match": "exact", "stage": "GEN", "note": "generic: builtin constructor"},
    {"pattern": "str", "match": "exact", "stage": "GEN", "note": "generic: builtin constructor"},
    {"pattern": "int", "match": "exact", "stage": "GEN", "note": "generic: builtin constructor"},
    {"pattern": "float", "match": "exact", "stage": "GEN", "note": "generic: builtin constructor"},
    {"pattern": "type", "match": "exact", "stage": "GEN", "note": "generic: builtin utility"},
    {"pattern": "isinstance", "match": "exact", "stage": "GEN", "note": "generic: builtin utility"},
    {"pattern": "getattr", "match": "exact", "stage": "GEN", "note": "generic: builtin utility"},
    {"pattern": "hasattr", "match": "exact", "stage": "GEN", "note": "generic: builtin utility"},
    {"pattern": "input", "match": "exact", "stage": "GEN", "note": "generic: console input"},
    {"pattern": "open", "match": "exact", "stage": "GEN", "note": "generic: raw file handle, stage depends on use"},
    {"pattern": "format", "match": "method-suffix", "stage": "GEN", "note": "generic: string formatting"},
    {"pattern": "append", "match": "method-suffix", "stage": "GEN", "note": "generic: list accumulation"},
    {"pattern": "join", "match": "method-suffix", "stage": "GEN", "note": "generic: string utility"},
    {"pattern": "split", "match": "method-suffix", "stage": "GEN", "note": "generic: string utility"},
    {"pattern": "strip", "match": "method-suffix", "stage": "GEN", "note": "generic: string utility"},
    {"pattern": "lower", "match": "method-suffix", "stage": "GEN", "note": "generic: string utility"},
    {"pattern": "upper", "match": "method-suffix", "stage": "GEN", "note": "generic: string utility"},
    {"pattern": "encode", "match": "method-suffix", "stage": "GEN", "note": "generic: string utility"},
    {"pattern": "decode", "match": "method-suffix", "stage": "GEN", "note": "generic: string utility"},
    {"pattern": "items", "match": "method-suffix", "stage": "GEN", "note": "generic: dict utility"},
    {"pattern": "get", "match": "method-suffix", "stage": "GEN", "note": "generic: dict utility"},
    {"pattern": "update", "match": "method-suffix", "stage": "GEN", "note": "generic: dict utility"},
    {"pattern": "keys", "match": "method-suffix", "stage": "GEN", "note": "generic: dict utility"},
    {"pattern": "close", "match": "method-suffix", "stage": "GEN", "note": "generic: resource handling"},
    {"pattern": "copy", "match": "method-suffix", "stage": "GEN", "note": "generic: object utility"},
    {"pattern": "get_params", "match": "method-suffix", "stage": "GEN", "note": "generic: estimator introspection"}
  ]
}
)JSON";
    return text;
}

} // namespace dspipe
