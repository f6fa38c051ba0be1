import pandas as pd
from sklearn.svm import SVC
from sklearn.metrics import accuracy_score

data = pd.read_csv("data.csv")
data = data.dropna()
clf = SVC(kernel="rbf")
features = data.fillna(0)
clf.fit(features, labels)
scaled = scaler.transform(features)
acc = accuracy_score(labels, preds)
