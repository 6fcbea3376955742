# retoric: real toric varieties
