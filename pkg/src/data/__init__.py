# Fan documents, named examples and random corpora
