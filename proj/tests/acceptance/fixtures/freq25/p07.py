import pandas as pd

df = pd.read_csv("part07.csv")
df = df.dropna()
acc = model.score(df, target)
