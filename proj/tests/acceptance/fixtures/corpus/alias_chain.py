import pandas as pd
import numpy as np

frame = pd.read_csv("raw.csv")
frame["z"] = np.log(frame["v"])
model.fit(scaler.transform(frame))
summary = frame.groupby("k").sum()
print(summary.head())
