import pandas as pd

df = pd.read_csv("part18.csv")
df = df.dropna()
pred = model.predict(df)
