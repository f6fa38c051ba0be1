import pandas as pd
from sklearn.tree import DecisionTreeClassifier

train = pd.read_csv("train.csv")
train = train.dropna()
model = DecisionTreeClassifier(max_depth=5)
model.fit(train, train["label"])
pred = model.predict(train)
