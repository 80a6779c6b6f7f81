# Classification engine: arithmetic, types, filters, pipeline
